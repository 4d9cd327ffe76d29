#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace specht {

/// Arbitrary-precision integer used for every coefficient and count in the
/// library.  All congruence claims are exact; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

/// An odd prime p >= 3, validated by trial division at construction.
class PrimeP {
public:
    explicit PrimeP(int64_t p);

    int64_t value() const { return p_; }

private:
    int64_t p_;
};

/// p-adic valuation: the greatest t with p^t | m.  Throws for m = 0.
int vp(const Int& m, const PrimeP& p);

/// Exact binomial coefficient; 0 when b < 0 or b > a.
Int binom(int64_t a, int64_t b);

/// C(a,b) mod p computed digit-wise from the base-p expansions of a and b
/// (Lucas).  Agrees with binom(a,b) mod p.
int64_t binom_mod_p(int64_t a, int64_t b, const PrimeP& p);

/// Number of carries when adding x and y in base p (Kummer).  Equals
/// vp(binom(x+y, x)) whenever x + y > 0.
int kummer_carries(int64_t x, int64_t y, const PrimeP& p);

/// True iff p divides every one of C(a,b), C(a-1,b-1), ..., C(a-b+1,1).
/// Requires a >= b >= 1.
bool all_divisible(int64_t a, int64_t b, const PrimeP& p);

/// Least l >= 0 with t < p^l.
int lp(int64_t t, const PrimeP& p);

/// p^e as an Int, e >= 0.
Int pow_int(int64_t base, int e);

}  // namespace specht
