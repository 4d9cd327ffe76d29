#pragma once

#include "specht/tabloids.hpp"

#include <optional>
#include <vector>

namespace specht {

/// Kernel Intersection Theorem membership: true iff psi_{i,v}(u) = 0 for
/// all 1 <= i <= r-1 and 0 <= v <= lambda_{i+1} - 1, over the integers or
/// mod p.  The shape must be a partition with positive parts.
bool in_specht(const TabloidVector& u);
bool in_specht(const TabloidVector& u, const PrimeP& p);

/// True iff lambda_i = -1 mod p^{lp(lambda_{i+1})} for every i with
/// lambda_{i+1} != 0 (the nonzero-invariants condition).
bool h0_nonzero(const Composition& partition, const PrimeP& p);

/// Verdict of Hemmer's criterion on a candidate u at an odd prime p.
struct HemmerReport {
    struct Entry {
        int i = 0;
        int64_t v = 0;
        bool is_multiple_of_f = false;
        int64_t scalar = 0;  // residue in [0, p); meaningful iff is_multiple_of_f
    };
    std::vector<Entry> entries;  // one per (i, v), i major, v minor
    bool condition_i = false;
    bool condition_ii = false;
    bool verdict = false;  // condition_i && condition_ii
};

/// Condition (i): every psi_{i,v}(u) mod p is a scalar multiple of f_nu with
/// at least one nonzero scalar.  Condition (ii): no a in {1..p-1} has
/// a * mu_{i,v} = lambda_{i,v} mod p for all (i, v), where mu is the scalar
/// of psi_{i,v}(f_lambda).
HemmerReport hemmer_check(const TabloidVector& u, const PrimeP& p);

/// If the reduced image is scalar * f of its shape, returns the scalar
/// (0 for the zero image).  Every tabloid of the shape must carry the same
/// residue, including the unstored zeros.
std::optional<int64_t> scalar_of_f_multiple(const TabloidVector& image_mod_p);

/// Scalar of psi_{i,v}(f_lambda): each target tabloid is hit by exactly
/// C(lambda_i + lambda_{i+1} - v, lambda_{i+1} - v) sources.
Int f_image_scalar(const Composition& shape, int i, int64_t v);

/// Exact nullity over Q of the stacked psi system (all KIT maps at once),
/// by fraction-free sparse elimination.
int64_t stacked_psi_nullity(const Composition& partition);

}  // namespace specht
