#include "specht/arith.hpp"

#include <stdexcept>
#include <string>

namespace specht {

PrimeP::PrimeP(int64_t p) : p_(p) {
    if (p < 3)
        throw std::invalid_argument("PrimeP: p must be an odd prime >= 3, got " + std::to_string(p));
    if (p % 2 == 0)
        throw std::invalid_argument("PrimeP: p = 2 is not supported");
    for (int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            throw std::invalid_argument("PrimeP: " + std::to_string(p) + " is not prime");
}

int vp(const Int& m, const PrimeP& p) {
    if (m == 0)
        throw std::invalid_argument("vp: valuation of 0 is infinite");
    Int n = abs(m);
    const Int q = p.value();
    int t = 0;
    while (n % q == 0) {
        n /= q;
        ++t;
    }
    return t;
}

Int binom(int64_t a, int64_t b) {
    if (a < 0)
        throw std::invalid_argument("binom: a must be nonnegative");
    if (b < 0 || b > a)
        return 0;
    if (b > a - b)
        b = a - b;
    Int res = 1;
    for (int64_t i = 1; i <= b; ++i) {
        res *= a - b + i;
        res /= i;  // exact: res is C(a-b+i, i) after this step
    }
    return res;
}

int64_t binom_mod_p(int64_t a, int64_t b, const PrimeP& p) {
    if (a < 0 || b < 0)
        throw std::invalid_argument("binom_mod_p: arguments must be nonnegative");
    const int64_t q = p.value();
    int64_t res = 1;
    while (a > 0 || b > 0) {
        const int64_t ad = a % q, bd = b % q;
        if (ad < bd)
            return 0;
        // C(ad, bd) mod q for digits < q, exact in 64 bits since q <= ~2^31
        int64_t num = 1, den = 1;
        for (int64_t i = 1; i <= bd; ++i) {
            num = (num * ((ad - bd + i) % q)) % q;
            den = (den * (i % q)) % q;
        }
        // den is invertible mod q (no factor p in 1..bd since bd < q)
        int64_t inv = 1, e = q - 2, base = den % q;
        while (e > 0) {
            if (e & 1)
                inv = (inv * base) % q;
            base = (base * base) % q;
            e >>= 1;
        }
        res = (res * ((num * inv) % q)) % q;
        a /= q;
        b /= q;
    }
    return res;
}

int kummer_carries(int64_t x, int64_t y, const PrimeP& p) {
    if (x < 0 || y < 0)
        throw std::invalid_argument("kummer_carries: arguments must be nonnegative");
    const int64_t q = p.value();
    int carries = 0, carry = 0;
    while (x > 0 || y > 0 || carry > 0) {
        const int64_t s = x % q + y % q + carry;
        carry = s >= q ? 1 : 0;
        carries += carry;
        x /= q;
        y /= q;
    }
    return carries;
}

bool all_divisible(int64_t a, int64_t b, const PrimeP& p) {
    if (a < b)
        throw std::invalid_argument("all_divisible: requires a >= b");
    if (b < 1)
        throw std::invalid_argument("all_divisible: requires b >= 1");
    for (int64_t i = 0; i < b; ++i)
        if (binom_mod_p(a - i, b - i, p) != 0)
            return false;
    return true;
}

int lp(int64_t t, const PrimeP& p) {
    if (t < 0)
        throw std::invalid_argument("lp: t must be nonnegative");
    int l = 0;
    Int pw = 1;
    while (pw <= t) {
        pw *= p.value();
        ++l;
    }
    return l;
}

Int pow_int(int64_t base, int e) {
    if (e < 0)
        throw std::invalid_argument("pow_int: negative exponent");
    Int r = 1;
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

}  // namespace specht
