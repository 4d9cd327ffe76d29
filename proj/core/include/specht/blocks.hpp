#pragma once

#include "specht/arith.hpp"

#include <cstdint>
#include <compare>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace specht {

/// Points 1..v.  Desk scale: v is capped at 20 so every subset fits a mask.
class GroundSet {
public:
    static constexpr int kMaxPoints = 20;

    explicit GroundSet(int v);

    int v() const { return v_; }
    uint32_t full_mask() const { return (v_ == 32) ? ~0u : ((1u << v_) - 1); }

    friend bool operator==(const GroundSet&, const GroundSet&) = default;

private:
    int v_;
};

/// A finite subset of {1..20} stored as a bit mask.  Comparison is numeric
/// mask order, which on sets is exactly colexicographic order.
class Block {
public:
    Block() = default;
    explicit Block(uint32_t mask) : mask_(mask) {}
    Block(std::initializer_list<int> points);
    explicit Block(const std::vector<int>& points);

    uint32_t mask() const { return mask_; }
    int size() const;
    bool empty() const { return mask_ == 0; }
    bool contains(int point) const;
    bool subset_of(const Block& other) const { return (mask_ & ~other.mask_) == 0; }
    bool disjoint_from(const Block& other) const { return (mask_ & other.mask_) == 0; }

    Block unite(const Block& other) const { return Block(mask_ | other.mask_); }
    Block minus(const Block& other) const { return Block(mask_ & ~other.mask_); }
    Block sym_diff(const Block& other) const { return Block(mask_ ^ other.mask_); }

    /// Elements in increasing order.
    std::vector<int> elements() const;

    auto operator<=>(const Block&) const = default;

private:
    uint32_t mask_ = 0;
};

/// Enumerate all k-subsets of {1..v} in colex order.
void for_each_block(int v, int k, const std::function<void(Block)>& fn);

/// Enumerate all k-subsets of a given block in colex order.
void for_each_subset(Block of, int k, const std::function<void(Block)>& fn);

/// Colex rank of a k-block among all k-subsets of {1..v}; 0-based.
int64_t colex_rank(const Block& b);

/// Sparse integer vector indexed by blocks.  No zero coefficient is ever
/// stored; iteration order over keys is colex.  Value semantics throughout.
class BlockVector {
public:
    explicit BlockVector(GroundSet ground) : ground_(ground) {}
    BlockVector(GroundSet ground, std::map<Block, Int> entries);

    const GroundSet& ground() const { return ground_; }
    const std::map<Block, Int>& entries() const { return entries_; }

    bool is_zero() const { return entries_.empty(); }
    Int coefficient(const Block& b) const;
    Int coefficient_sum() const;

    /// -1 when empty; throws if support blocks have mixed sizes.
    int constant_block_size() const;

    BlockVector operator+(const BlockVector& rhs) const;
    BlockVector operator-(const BlockVector& rhs) const;
    BlockVector operator-() const;
    BlockVector operator*(const Int& scalar) const;

    friend bool operator==(const BlockVector&, const BlockVector&) = default;

private:
    GroundSet ground_;
    std::map<Block, Int> entries_;
};

/// Indicator vector of a single block.
BlockVector delta(const GroundSet& ground, const Block& x);

/// delta_{q} - delta_{r} for distinct points q, r.
BlockVector dqr(const GroundSet& ground, int q, int r);

/// Coefficient one on every block of the given size.
BlockVector ones(const GroundSet& ground, int size);

/// Restriction of the transform c-hat to s-blocks:
/// out(y) = sum of c(x) over all stored x containing y.
BlockVector transform(const BlockVector& c, int s);

/// Convolution (c*d)(z) = sum over x, y with x symdiff y = z of c(x)d(y).
BlockVector convolve(const BlockVector& c, const BlockVector& d);

/// Keys of the nonzero entries.
std::set<Block> support(const BlockVector& c);

/// Union of the blocks in the support.
Block foundation(const BlockVector& c);

/// Point-deletion map onto {1..v-1}: out(x) = c(x + {v}).
BlockVector delete_point(const BlockVector& c);

/// Exact rank of the C(v,t) x C(v,l) inclusion matrix, by fraction-free
/// elimination over the integers.  Guarded at v <= 16.
int64_t inclusion_rank(int v, int t, int l);

}  // namespace specht
