#include "specht/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace specht;

namespace {

IntMat random_matrix(std::mt19937_64& rng, size_t m, size_t n, int64_t span) {
    IntMat a(m, std::vector<Int>(n));
    for (auto& row : a)
        for (auto& x : row)
            x = static_cast<int64_t>(rng() % (2 * span + 1)) - span;
    return a;
}

std::vector<Int> matvec(const IntMat& a, const std::vector<Int>& x) {
    std::vector<Int> out(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            out[i] += a[i][j] * x[j];
    return out;
}

}  // namespace

TEST_CASE("exact_rank small cases") {
    CHECK(exact_rank({}) == 0);
    CHECK(exact_rank({{0, 0}, {0, 0}}) == 0);
    CHECK(exact_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(exact_rank({{1, 2}, {3, 4}}) == 2);
    CHECK(exact_rank({{1, 0, 2}, {0, 1, 3}, {1, 1, 5}}) == 2);
}

TEST_CASE("sparse echelon rank matches Bareiss") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const size_t m = 1 + rng() % 8, n = 1 + rng() % 8;
        const IntMat a = random_matrix(rng, m, n, 4);
        SparseEchelon e;
        for (const auto& row : a) {
            SparseRow r;
            for (size_t j = 0; j < n; ++j)
                if (row[j] != 0)
                    r.emplace_back(static_cast<int64_t>(j), row[j]);
            e.insert(std::move(r));
        }
        CHECK(e.rank() == exact_rank(a));
    }
}

TEST_CASE("nullspace vectors annihilate the matrix") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const size_t m = 1 + rng() % 6, n = 2 + rng() % 7;
        const IntMat a = random_matrix(rng, m, n, 3);
        SparseEchelon e;
        for (const auto& row : a) {
            SparseRow r;
            for (size_t j = 0; j < n; ++j)
                if (row[j] != 0)
                    r.emplace_back(static_cast<int64_t>(j), row[j]);
            e.insert(std::move(r));
        }
        const auto basis = e.nullspace(static_cast<int64_t>(n));
        CHECK(static_cast<int64_t>(basis.size()) == static_cast<int64_t>(n) - e.rank());
        for (const auto& vec : basis) {
            const auto image = matvec(a, vec);
            for (const Int& x : image)
                CHECK(x == 0);
            Int g = 0;
            for (const Int& x : vec)
                g = gcd(g, abs(x));
            CHECK(g == 1);  // content-normalized
        }
    }
}

TEST_CASE("solve_rational") {
    const IntMat a = {{1, 1}, {1, -1}};
    const auto x = solve_rational(a, {Int(3), Int(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);

    // inconsistent
    CHECK_FALSE(solve_rational({{1, 1}, {2, 2}}, {Int(1), Int(3)}).has_value());

    // underdetermined: any solution is fine
    const IntMat u = {{2, 4}};
    const auto y = solve_rational(u, {Int(3)});
    REQUIRE(y.has_value());
    CHECK(Rat(2) * (*y)[0] + Rat(4) * (*y)[1] == Rat(3));
}

TEST_CASE("solve_integer finds lattice solutions") {
    // 2x + 3y = 1 solvable over Z
    auto x = solve_integer({{2, 3}}, {Int(1)});
    REQUIRE(x.has_value());
    CHECK(Int(2) * (*x)[0] + Int(3) * (*x)[1] == 1);

    // 2x + 4y = 3 has no integer solution
    CHECK_FALSE(solve_integer({{2, 4}}, {Int(3)}).has_value());

    // inconsistent over Q
    CHECK_FALSE(solve_integer({{1, 1}, {1, 1}}, {Int(0), Int(1)}).has_value());

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const size_t m = 1 + rng() % 5, n = 1 + rng() % 6;
        const IntMat a = random_matrix(rng, m, n, 5);
        std::vector<Int> planted(n);
        for (auto& e : planted)
            e = static_cast<int64_t>(rng() % 11) - 5;
        const auto b = matvec(a, planted);
        const auto sol = solve_integer(a, b);
        REQUIRE(sol.has_value());
        CHECK(matvec(a, *sol) == b);
    }
}
