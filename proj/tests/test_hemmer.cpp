#include "specht/hemmer.hpp"

#include <doctest.h>

#include <functional>
#include <stdexcept>

using namespace specht;

namespace {

std::vector<std::vector<int64_t>> partitions_of(int64_t n) {
    std::vector<std::vector<int64_t>> out;
    std::vector<int64_t> cur;
    std::function<void(int64_t, int64_t)> rec = [&](int64_t rest, int64_t max_part) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int64_t p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace

TEST_CASE("in_specht examples at (2,1)") {
    const Composition s21({2, 1});
    const TabloidVector diff(s21, {{Tabloid{{Block{1}}}, Int(1)}, {Tabloid{{Block{2}}}, Int(-1)}});
    CHECK(in_specht(diff));

    const TabloidVector single(s21, {{Tabloid{{Block{1}}}, Int(1)}});
    CHECK_FALSE(in_specht(single));

    // the mod-p kernel can be strictly larger than the integer one
    CHECK(in_specht(single * Int(3), PrimeP(3)));
    CHECK_FALSE(in_specht(single, PrimeP(3)));

    // kernel dimension over Q equals the hook-length dimension
    CHECK(stacked_psi_nullity(s21) == 2);
    CHECK(dim_specht(s21) == 2);
}

TEST_CASE("h0_nonzero") {
    const PrimeP p3(3);
    CHECK(h0_nonzero(Composition({8, 3}), p3));        // 8 = -1 mod 9
    CHECK_FALSE(h0_nonzero(Composition({3, 3}), p3));  // 3 != -1 mod 9
    for (int64_t n : {1, 4, 11})
        CHECK(h0_nonzero(Composition({n}), p3));
    CHECK(h0_nonzero(Composition({2, 1}), p3));  // 2 = -1 mod 3
    CHECK_FALSE(h0_nonzero(Composition({3, 1}), p3));
    // b = p^n, a = -1 mod p^{n+1} is always accepted
    for (int64_t a : {8, 17, 26})
        CHECK(h0_nonzero(Composition({a, 3}), p3));
}

TEST_CASE("scalar_of_f_multiple") {
    const PrimeP p3(3);
    const Composition s21({2, 1});
    CHECK(scalar_of_f_multiple(TabloidVector(s21)) == 0);
    CHECK(scalar_of_f_multiple(reduce_mod(f_lambda(s21) * Int(2), p3)) == 2);
    // missing tabloids disqualify a nonzero scalar
    const TabloidVector partial(s21, {{Tabloid{{Block{1}}}, Int(1)},
                                      {Tabloid{{Block{2}}}, Int(1)}});
    CHECK_FALSE(scalar_of_f_multiple(partial).has_value());
    // unequal residues disqualify
    const TabloidVector mixed(s21, {{Tabloid{{Block{1}}}, Int(1)},
                                    {Tabloid{{Block{2}}}, Int(2)},
                                    {Tabloid{{Block{3}}}, Int(1)}});
    CHECK_FALSE(scalar_of_f_multiple(mixed).has_value());
}

TEST_CASE("f_image_scalar matches a brute-force image") {
    for (const Composition& shape : {Composition({3, 2}), Composition({3, 2, 1})}) {
        const TabloidVector f = f_lambda(shape);
        for (int i = 1; i < shape.rows(); ++i)
            for (int64_t v = 0; v < shape.parts()[i]; ++v) {
                const TabloidVector image = psi(f, i, v);
                const Int expected = f_image_scalar(shape, i, v);
                for (const auto& [t, c] : image.entries())
                    CHECK(c == expected);
                CHECK(Int(static_cast<int64_t>(image.entries().size())) ==
                      tabloid_count(psi_target_shape(shape, i, v)));
            }
    }
}

TEST_CASE("hemmer_check degenerate candidates") {
    const PrimeP p3(3);
    const Composition s21({2, 1});

    // u = f_lambda fails condition (ii) with a = 1 (at p = 5 the image
    // scalar 3 is nonzero, so condition (i) holds and (ii) is the failure)
    const HemmerReport rf5 = hemmer_check(f_lambda(s21), PrimeP(5));
    CHECK(rf5.condition_i);
    CHECK_FALSE(rf5.condition_ii);
    CHECK_FALSE(rf5.verdict);
    // at p = 3 the image of f vanishes mod p, so (i) fails as well
    const HemmerReport rf = hemmer_check(f_lambda(s21), p3);
    CHECK_FALSE(rf.condition_i);
    CHECK_FALSE(rf.condition_ii);
    CHECK_FALSE(rf.verdict);

    // u = 0 fails condition (i): no nonzero scalar
    const HemmerReport rz = hemmer_check(TabloidVector(s21), p3);
    CHECK_FALSE(rz.condition_i);
    CHECK_FALSE(rz.verdict);

    // report covers exactly the KIT pairs
    CHECK(rf.entries.size() == 1);
    CHECK(rf.entries[0].i == 1);
    CHECK(rf.entries[0].v == 0);

    CHECK_THROWS_AS(hemmer_check(f_lambda(Composition({1, 2})), p3), std::invalid_argument);
}

TEST_CASE("stacked psi nullity equals hook dimension up to n = 6") {
    for (int64_t n = 1; n <= 6; ++n)
        for (const auto& parts : partitions_of(n)) {
            const Composition lambda(parts);
            CHECK(Int(stacked_psi_nullity(lambda)) == dim_specht(lambda));
        }
}

TEST_CASE("h0 matches the fixed-vector computation up to n = 6") {
    for (int64_t n = 1; n <= 6; ++n)
        for (const auto& parts : partitions_of(n)) {
            const Composition lambda(parts);
            const TabloidVector f = f_lambda(lambda);
            for (int64_t pv : {3, 5, 7})
                CHECK(h0_nonzero(lambda, PrimeP(pv)) == in_specht(f, PrimeP(pv)));
        }
}
