#pragma once

#include "specht/designs.hpp"
#include "specht/hemmer.hpp"
#include "specht/tabloids.hpp"

#include <optional>
#include <vector>

namespace specht {

/// Shape (r p^n, p^n) with p not dividing r or r+1.
struct Case1Params {
    Case1Params(PrimeP p, int n, int64_t r);

    PrimeP p;
    int n;
    int64_t r;

    int64_t p_pow_n() const;
    Composition lambda() const;
};

/// Shape (a, p^n) with a >= p^n and a = -1 mod p^{n+1}.
struct Case2Params {
    Case2Params(PrimeP p, int n, int64_t a);

    PrimeP p;
    int n;
    int64_t a;

    int64_t p_pow_n() const;
    Composition lambda() const;
};

/// u = sum over i of (i+1) v_i, where v_i collects the tabloids with exactly
/// i elements of {1..p^n - 1} in row two.  Checked before returning:
/// psi_{1,0}(u) has scalar prime to p and psi_{1,s}(u) = 0 mod p for s >= 1.
TabloidVector case1_u(const Case1Params& params);

/// Coefficient A_{s,t} of the canonical tabloid in psi_{1,s}(case1_u):
/// sum over m = t..p^n-1 of (m+1) C(p^n-1-t, m-t) C(rp^n-s+t+1, (r-1)p^n+m+1).
/// Requires 0 <= t <= s < p^n and s >= 1.
Int a_coefficient(int64_t s, int64_t t, const Case1Params& params);

/// u = sum of the tabloids whose row two avoids {1..p^n}.  Checked before
/// returning: psi_{1,0}(u) = C(a, p^n) with C(a, p^n) prime to p, and
/// psi_{1,v}(u) = 0 mod p for 1 <= v <= p^n - 1.
TabloidVector case2_u(const Case2Params& params);

/// The 2-part construction through an integral design: scalars
/// lambda_s = p^{-d} C(a+b-s, a) with d the minimal valuation, the design
/// built for (a+b, b, b-1), and u its row-two tabloid vector.  Postcondition
/// (verified): psi_{1,v}(u) = lambda_v f_v exactly over Z for all v, with
/// some lambda_v nonzero mod p.
struct MainWitness {
    std::vector<Int> scalars;  // lambda_0 .. lambda_{b-1}
    TabloidVector u;
};

MainWitness main_u(int64_t a, int64_t b, const PrimeP& p);

/// Dimension comparison behind the 3-part argument:
/// lhs = dim S^{(a,b,c)} + dim M^{(a,b,c)},
/// rhs = C(d,c)(C(a+b,b) - C(a+b,b-1) + 1) + C(d,a)(C(b+c,c) - C(b+c,c-1) + 1).
struct ThreePartDims {
    Int lhs;
    Int rhs;
    bool holds;  // lhs < rhs
};

ThreePartDims three_part_dim_check(int64_t a, int64_t b, int64_t c);

/// Exact nullspace of the conditions "every psi_{1,v} and psi_{2,w} image is
/// a constant vector", scanned for a vector outside S^lambda whose images
/// include one nonzero mod p.  Deterministic; returns nullopt when no basis
/// vector qualifies.  Guarded at dim M <= 5000.
std::optional<TabloidVector> three_part_search(int64_t a, int64_t b, int64_t c, const PrimeP& p);

}  // namespace specht
