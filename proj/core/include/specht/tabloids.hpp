#pragma once

#include "specht/arith.hpp"
#include "specht/blocks.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace specht {

/// A composition (nonnegative parts, n >= 1).  A partition is a composition
/// with non-increasing parts.
class Composition {
public:
    explicit Composition(std::vector<int64_t> parts);

    const std::vector<int64_t>& parts() const { return parts_; }
    int64_t n() const { return n_; }
    int64_t rows() const { return static_cast<int64_t>(parts_.size()); }
    bool is_partition() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int64_t> parts_;
    int64_t n_;
};

/// A lambda-tabloid stored by rows 2..r as pairwise disjoint blocks over
/// {1..n}; row 1 is the complement.  For a 2-part shape this is exactly the
/// row-two block.
struct Tabloid {
    std::vector<Block> rows;  // rows 2 .. r

    auto operator<=>(const Tabloid&) const = default;
};

/// Sparse integer vector over lambda-tabloids (an element of M^lambda).
class TabloidVector {
public:
    explicit TabloidVector(Composition shape) : shape_(std::move(shape)) {}
    TabloidVector(Composition shape, std::map<Tabloid, Int> entries);

    const Composition& shape() const { return shape_; }
    const std::map<Tabloid, Int>& entries() const { return entries_; }

    bool is_zero() const { return entries_.empty(); }
    Int coefficient(const Tabloid& t) const;
    Int coefficient_sum() const;

    TabloidVector operator+(const TabloidVector& rhs) const;
    TabloidVector operator-(const TabloidVector& rhs) const;
    TabloidVector operator-() const;
    TabloidVector operator*(const Int& scalar) const;

    friend bool operator==(const TabloidVector&, const TabloidVector&) = default;

private:
    Composition shape_;
    std::map<Tabloid, Int> entries_;
};

/// Desk-scale guard on tabloid enumeration; default 10^6, overridable via
/// the SPECHT_GUARD environment variable or set_tabloid_guard.
uint64_t tabloid_guard();
void set_tabloid_guard(uint64_t guard);

/// Number of lambda-tabloids = n! / (lambda_1! ... lambda_r!).
Int tabloid_count(const Composition& shape);

/// Enumerates all tabloids of the shape (deterministic order).
void for_each_tabloid(const Composition& shape, const std::function<void(const Tabloid&)>& fn);

/// Sum of all lambda-tabloids, each with coefficient one.
TabloidVector f_lambda(const Composition& shape);

/// The homomorphism psi_{i,v}: keeps a v-subset of row i+1 and moves the
/// complement into row i; extended linearly.  Requires 1 <= i <= r-1 and
/// 0 <= v <= lambda_{i+1}.
TabloidVector psi(const TabloidVector& u, int i, int64_t v);

/// Composition of the image module of psi_{i,v}.
Composition psi_target_shape(const Composition& shape, int i, int64_t v);

/// Images of a single tabloid under psi_{i,v}, one callback per kept subset.
void psi_images(const Composition& shape, const Tabloid& t, int i, int64_t v,
                const std::function<void(const Tabloid&)>& fn);

/// Hook length formula: n! divided by the product of hook lengths.
Int dim_specht(const Composition& partition);

/// Multinomial dimension of M^lambda.
Int dim_m(const Composition& shape);

/// Coefficients of u reduced into [0, p); zero coefficients dropped.
TabloidVector reduce_mod(const TabloidVector& u, const PrimeP& p);

/// Bridge with design vectors for 2-part shapes: a block vector of constant
/// block size b over v = a+b points corresponds to row-two blocks.
TabloidVector tabloid_vector_from_blocks(const BlockVector& c, const Composition& two_part);
BlockVector blocks_from_tabloid_vector(const TabloidVector& u);

}  // namespace specht
