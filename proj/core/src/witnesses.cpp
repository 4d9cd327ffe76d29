#include "specht/witnesses.hpp"

#include "specht/linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace specht {

namespace {

int64_t checked_pow(int64_t p, int n) {
    int64_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > GroundSet::kMaxPoints * 1024LL)
            throw std::length_error("p^n exceeds desk scale");
        r *= p;
    }
    return r;
}

void check_desk_scale(const Composition& shape) {
    if (shape.n() > GroundSet::kMaxPoints)
        throw std::length_error("shape needs " + std::to_string(shape.n()) +
                                " points, beyond desk scale (20)");
    const Int count = tabloid_count(shape);
    if (count > tabloid_guard())
        throw std::length_error("shape has " + count.str() + " tabloids, beyond guard " +
                                std::to_string(tabloid_guard()));
}

// Exact scalar c with image == c * f of its shape; nullopt otherwise.
std::optional<Int> exact_f_scalar(const TabloidVector& image) {
    if (image.is_zero())
        return Int(0);
    const Int& first = image.entries().begin()->second;
    for (const auto& [t, c] : image.entries())
        if (c != first)
            return std::nullopt;
    if (Int(static_cast<int64_t>(image.entries().size())) != tabloid_count(image.shape()))
        return std::nullopt;
    return first;
}

}  // namespace

Case1Params::Case1Params(PrimeP p_, int n_, int64_t r_) : p(p_), n(n_), r(r_) {
    if (n < 1)
        throw std::invalid_argument("Case1Params: n must be >= 1");
    if (r < 1)
        throw std::invalid_argument("Case1Params: r must be >= 1");
    if (r % p.value() == 0)
        throw std::invalid_argument("Case1Params: p must not divide r");
    if ((r + 1) % p.value() == 0)
        throw std::invalid_argument("Case1Params: p must not divide r+1");
}

int64_t Case1Params::p_pow_n() const {
    return checked_pow(p.value(), n);
}

Composition Case1Params::lambda() const {
    const int64_t pn = p_pow_n();
    return Composition({r * pn, pn});
}

Case2Params::Case2Params(PrimeP p_, int n_, int64_t a_) : p(p_), n(n_), a(a_) {
    if (n < 0)
        throw std::invalid_argument("Case2Params: n must be >= 0");
    const int64_t pn = checked_pow(p.value(), n);
    if (a < pn)
        throw std::invalid_argument("Case2Params: need a >= p^n");
    const int64_t pn1 = pn * p.value();
    if ((a + 1) % pn1 != 0)
        throw std::invalid_argument("Case2Params: need a = -1 mod p^{n+1}");
}

int64_t Case2Params::p_pow_n() const {
    return checked_pow(p.value(), n);
}

Composition Case2Params::lambda() const {
    return Composition({a, p_pow_n()});
}

TabloidVector case1_u(const Case1Params& params) {
    const int64_t pn = params.p_pow_n();
    const Composition shape = params.lambda();
    check_desk_scale(shape);

    const uint32_t marked = (pn >= 2) ? ((1u << (pn - 1)) - 1) : 0u;  // {1 .. p^n - 1}
    std::map<Tabloid, Int> entries;
    for_each_block(static_cast<int>(shape.n()), static_cast<int>(pn), [&](Block row2) {
        const int i = std::popcount(row2.mask() & marked);
        entries.emplace(Tabloid{{row2}}, i + 1);
    });
    TabloidVector u(shape, std::move(entries));

    const int64_t p = params.p.value();
    const TabloidVector im0 = psi(u, 1, 0);
    if (im0.entries().size() != 1 || im0.coefficient_sum() % p == 0)
        throw std::logic_error("case1_u: psi_{1,0}(u) scalar is divisible by p");
    for (int64_t s = 1; s < pn; ++s)
        if (!reduce_mod(psi(u, 1, s), params.p).is_zero())
            throw std::logic_error("case1_u: psi_{1," + std::to_string(s) +
                                   "}(u) does not vanish mod p");
    return u;
}

Int a_coefficient(int64_t s, int64_t t, const Case1Params& params) {
    const int64_t pn = params.p_pow_n();
    if (s < 1 || s >= pn)
        throw std::invalid_argument("a_coefficient: need 1 <= s < p^n");
    if (t < 0 || t > s)
        throw std::invalid_argument("a_coefficient: need 0 <= t <= s");
    const int64_t r = params.r;
    Int acc = 0;
    for (int64_t m = t; m <= pn - 1; ++m)
        acc += Int(m + 1) * binom(pn - 1 - t, m - t) *
               binom(r * pn - s + t + 1, (r - 1) * pn + m + 1);
    return acc;
}

TabloidVector case2_u(const Case2Params& params) {
    const int64_t pn = params.p_pow_n();
    const Composition shape = params.lambda();
    check_desk_scale(shape);

    const uint32_t avoid = (1u << pn) - 1;  // {1 .. p^n}
    std::map<Tabloid, Int> entries;
    for_each_block(static_cast<int>(shape.n()), static_cast<int>(pn), [&](Block row2) {
        if ((row2.mask() & avoid) == 0)
            entries.emplace(Tabloid{{row2}}, 1);
    });
    TabloidVector u(shape, std::move(entries));

    const int64_t p = params.p.value();
    const TabloidVector im0 = psi(u, 1, 0);
    const Int expected = binom(params.a, pn);
    if (im0.coefficient_sum() != expected)
        throw std::logic_error("case2_u: psi_{1,0}(u) != C(a, p^n)");
    if (expected % p == 0)
        throw std::logic_error("case2_u: C(a, p^n) is divisible by p");
    for (int64_t v = 1; v < pn; ++v)
        if (!reduce_mod(psi(u, 1, v), params.p).is_zero())
            throw std::logic_error("case2_u: psi_{1," + std::to_string(v) +
                                   "}(u) does not vanish mod p");
    return u;
}

MainWitness main_u(int64_t a, int64_t b, const PrimeP& p) {
    if (b < 1 || a < b)
        throw std::invalid_argument("main_u: need 1 <= b <= a");
    const Composition shape({a, b});
    check_desk_scale(shape);

    // lambda_s = p^{-d} C(a+b-s, a), d = min valuation over s = 0..b-1.
    std::vector<Int> lambdas;
    int d = -1;
    for (int64_t s = 0; s < b; ++s) {
        lambdas.push_back(binom(a + b - s, a));
        const int val = vp(lambdas.back(), p);
        if (d < 0 || val < d)
            d = val;
    }
    const Int pd = pow_int(p.value(), d);
    for (Int& l : lambdas)
        l /= pd;

    const DesignParams params(static_cast<int>(a + b), static_cast<int>(b),
                              static_cast<int>(b - 1), lambdas);
    const BlockVector c = construct_design(params);
    TabloidVector u = tabloid_vector_from_blocks(c, shape);

    bool some_nonzero = false;
    const Int sum = u.coefficient_sum();
    for (int64_t v = 0; v < b; ++v) {
        const TabloidVector image = psi(u, 1, static_cast<int>(v));
        const auto scalar = exact_f_scalar(image);
        if (!scalar || *scalar != lambdas[v])
            throw std::logic_error("main_u: psi_{1," + std::to_string(v) +
                                   "}(u) != lambda_v f_v");
        // coefficient-sum relation: C(a+b,v) lambda_v = C(b,v) sum(u)
        if (binom(a + b, v) * lambdas[v] != binom(b, v) * sum)
            throw std::logic_error("main_u: coefficient-sum relation fails");
        if (lambdas[v] % p.value() != 0)
            some_nonzero = true;
    }
    if (!some_nonzero)
        throw std::logic_error("main_u: all scalars vanish mod p");
    return MainWitness{std::move(lambdas), std::move(u)};
}

ThreePartDims three_part_dim_check(int64_t a, int64_t b, int64_t c) {
    if (!(a >= b && b >= c && c >= 1))
        throw std::invalid_argument("three_part_dim_check: need a >= b >= c >= 1");
    const Composition shape({a, b, c});
    const int64_t d = a + b + c;
    ThreePartDims out{Int(0), Int(0), false};
    out.lhs = dim_specht(shape) + dim_m(shape);
    out.rhs = binom(d, c) * (binom(a + b, b) - binom(a + b, b - 1) + 1) +
              binom(d, a) * (binom(b + c, c) - binom(b + c, c - 1) + 1);
    out.holds = out.lhs < out.rhs;
    return out;
}

std::optional<TabloidVector> three_part_search(int64_t a, int64_t b, int64_t c, const PrimeP& p) {
    if (!(a >= b && b >= c && c >= 1))
        throw std::invalid_argument("three_part_search: need a >= b >= c >= 1");
    const Composition shape({a, b, c});
    if (shape.n() > GroundSet::kMaxPoints)
        throw std::length_error("three_part_search: beyond desk scale");
    const Int dim = dim_m(shape);
    if (dim > 5000)
        throw std::length_error("three_part_search: dim M = " + dim.str() + " exceeds 5000");
    const int64_t n_cols = dim.convert_to<int64_t>();

    std::vector<Tabloid> tabloids;
    std::map<Tabloid, int64_t> index;
    for_each_tabloid(shape, [&](const Tabloid& t) {
        index.emplace(t, static_cast<int64_t>(tabloids.size()));
        tabloids.push_back(t);
    });

    // Stack, per map, the equality of coefficients between consecutive
    // target tabloids; the solution space is the intersection of the
    // preimages of the constant vectors.
    std::vector<std::pair<int, int64_t>> maps;
    for (int64_t v = 0; v < b; ++v)
        maps.emplace_back(1, v);
    for (int64_t w = 0; w < c; ++w)
        maps.emplace_back(2, w);

    SparseEchelon echelon;
    for (const auto& [i, v] : maps) {
        std::map<Tabloid, SparseRow> sources_of;
        for (int64_t j = 0; j < n_cols; ++j)
            psi_images(shape, tabloids[j], i, v, [&](const Tabloid& image) {
                sources_of[image].emplace_back(j, 1);
            });
        const Tabloid* prev = nullptr;
        for (auto& [target, row] : sources_of) {
            std::sort(row.begin(), row.end());
            if (prev != nullptr) {
                SparseRow diff;
                const SparseRow& a_row = sources_of[*prev];
                size_t x = 0, y = 0;
                while (x < a_row.size() || y < row.size()) {
                    if (y == row.size() || (x < a_row.size() && a_row[x].first < row[y].first))
                        diff.emplace_back(a_row[x++].first, 1);
                    else if (x == a_row.size() || row[y].first < a_row[x].first)
                        diff.emplace_back(row[y++].first, -1);
                    else {
                        ++x;
                        ++y;
                    }
                }
                echelon.insert(std::move(diff));
            }
            prev = &target;
        }
    }

    for (const std::vector<Int>& w : echelon.nullspace(n_cols)) {
        std::map<Tabloid, Int> entries;
        for (int64_t j = 0; j < n_cols; ++j)
            if (w[j] != 0)
                entries.emplace(tabloids[j], w[j]);
        TabloidVector u(shape, std::move(entries));
        bool nonzero_scalar = false;
        for (const auto& [i, v] : maps) {
            const auto scalar = exact_f_scalar(psi(u, i, v));
            if (!scalar)
                throw std::logic_error("three_part_search: image is not a constant vector");
            if (*scalar % p.value() != 0) {
                nonzero_scalar = true;
                break;
            }
        }
        if (nonzero_scalar)
            return u;
    }
    return std::nullopt;
}

}  // namespace specht
