#pragma once

#include "specht/blocks.hpp"

#include <vector>

namespace specht {

/// Parameters (v, l, lambda_0..lambda_t) of an integral design.  The ratio
/// condition (v-s) lambda_{s+1} = (l-s) lambda_s for 0 <= s < t is enforced
/// with exact integer equality at construction.
struct DesignParams {
    int v = 1;
    int l = 0;
    int t = 0;
    std::vector<Int> lambdas;  // lambda_0 .. lambda_t

    DesignParams(int v, int l, int t, std::vector<Int> lambdas);
};

/// Computes lambda_{s+1} = (l-s) lambda_s / (v-s) iteratively from lambda0.
/// Throws, naming the failing step, when some division is not exact.
DesignParams admissible(int v, int l, int t, const Int& lambda0);

/// A t,l-pod: d_{p0 q0} * ... * d_{pt qt} * delta_x with all 2t+2 points and
/// x pairwise disjoint.  Foundation size is l + t + 1.
struct Pod {
    std::vector<int> p_points;  // t+1 points
    std::vector<int> q_points;  // t+1 points
    Block x;                    // l - t - 1 points

    int t() const { return static_cast<int>(p_points.size()) - 1; }
    int l() const { return t() + 1 + x.size(); }
    Block foundation_block() const;
};

/// Expands the defining convolution.  The result has constant block size l
/// and 2^{t+1} entries with coefficients +-1.
BlockVector pod_vector(const GroundSet& ground, const Pod& pod);

/// A list of exactly C(v,l) - C(v,t) pods whose vectors are linearly
/// independent (confirmed by exact rank).  Candidates are enumerated in
/// colex order of foundations and kept greedily while the rank grows.
/// Empty when the dimension formula is nonpositive.
std::vector<Pod> null_basis(int v, int t, int l);

/// The inductive construction: start from lambda0 * delta_{1..l} and repair
/// one transform level at a time by subtracting a lifted combination of
/// pods.  The result is verified internally before returning.
BlockVector construct_design(const DesignParams& params);

/// True iff c has constant block size l and transform(c, s) equals
/// lambda_s * ones(s) exactly for every s <= t.
bool verify_design(const BlockVector& c, const DesignParams& params);

/// Independent oracle: solves the stacked linear system
/// transform(c, s) = lambda_s * ones(s), s = 0..t, directly by exact
/// elimination.  Guarded at v <= 14.
BlockVector solve_design_oracle(const DesignParams& params);

}  // namespace specht
