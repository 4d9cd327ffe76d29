#include "specht/blocks.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace specht;

namespace {

BlockVector random_vector(std::mt19937_64& rng, const GroundSet& g, int l, int terms) {
    std::vector<Block> blocks;
    for_each_block(g.v(), l, [&](Block b) { blocks.push_back(b); });
    std::map<Block, Int> entries;
    for (int k = 0; k < terms; ++k) {
        const Block b = blocks[rng() % blocks.size()];
        const int64_t coeff = static_cast<int64_t>(rng() % 21) - 10;
        Int& slot = entries[b];
        slot += coeff;
        if (slot == 0)
            entries.erase(b);
    }
    return BlockVector(g, std::move(entries));
}

}  // namespace

TEST_CASE("block basics and colex order") {
    const Block b{1, 2, 4};
    CHECK(b.size() == 3);
    CHECK(b.contains(4));
    CHECK_FALSE(b.contains(3));
    CHECK(b.elements() == std::vector<int>{1, 2, 4});
    CHECK_THROWS_AS(Block({1, 1}), std::invalid_argument);

    // mask order is colex: {1,2} < {1,3} < {2,3} < {1,4}
    CHECK(Block{1, 2} < Block{1, 3});
    CHECK(Block{1, 3} < Block{2, 3});
    CHECK(Block{2, 3} < Block{1, 4});

    CHECK(colex_rank(Block{1, 2}) == 0);
    CHECK(colex_rank(Block{1, 3}) == 1);
    int64_t expect = 0;
    for_each_block(6, 3, [&](Block x) { CHECK(colex_rank(x) == expect++); });
    CHECK(expect == 20);
}

TEST_CASE("ground set bounds") {
    CHECK_THROWS_AS(GroundSet(0), std::invalid_argument);
    CHECK_THROWS_AS(GroundSet(21), std::invalid_argument);
    CHECK(GroundSet(20).v() == 20);
}

TEST_CASE("delta and dqr") {
    const GroundSet g4(4);
    const BlockVector d = delta(g4, Block{1, 2});
    CHECK(d.entries().size() == 1);
    CHECK(d.coefficient(Block{1, 2}) == 1);
    CHECK(delta(GroundSet(7), Block{}).coefficient(Block{}) == 1);
    CHECK_THROWS_AS(delta(GroundSet(3), Block{5}), std::invalid_argument);

    const BlockVector d12 = dqr(g4, 1, 2);
    CHECK(d12.coefficient(Block{1}) == 1);
    CHECK(d12.coefficient(Block{2}) == -1);
    CHECK(transform(d12, 0).is_zero());
    CHECK_THROWS_AS(dqr(g4, 2, 2), std::invalid_argument);
}

TEST_CASE("transform on simple vectors") {
    const GroundSet g4(4);
    const BlockVector c = delta(g4, Block{1, 2});
    const BlockVector t1 = transform(c, 1);
    CHECK(t1.coefficient(Block{1}) == 1);
    CHECK(t1.coefficient(Block{2}) == 1);
    CHECK(t1.entries().size() == 2);
    CHECK_THROWS_AS(transform(c, 5), std::invalid_argument);
}

TEST_CASE("Fano plane pair transform") {
    const GroundSet g7(7);
    const std::vector<Block> fano = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                                     {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
    std::map<Block, Int> entries;
    for (const Block& b : fano)
        entries.emplace(b, 1);
    const BlockVector c(g7, std::move(entries));
    const BlockVector pairs = transform(c, 2);
    // brute force: each of the 21 pairs lies in exactly one listed triple
    int64_t checked = 0;
    for_each_block(7, 2, [&](Block y) {
        int count = 0;
        for (const Block& b : fano)
            if (y.subset_of(b))
                ++count;
        CHECK(count == 1);
        CHECK(pairs.coefficient(y) == 1);
        ++checked;
    });
    CHECK(checked == 21);
    CHECK(pairs.entries().size() == 21);
}

TEST_CASE("convolution") {
    const GroundSet g4(4);
    const BlockVector prod = convolve(dqr(g4, 1, 2), dqr(g4, 3, 4));
    CHECK(prod.coefficient(Block{1, 3}) == 1);
    CHECK(prod.coefficient(Block{1, 4}) == -1);
    CHECK(prod.coefficient(Block{2, 3}) == -1);
    CHECK(prod.coefficient(Block{2, 4}) == 1);
    CHECK(prod.entries().size() == 4);
    CHECK(transform(prod, 1).is_zero());
    CHECK(transform(prod, 0).is_zero());

    // delta_empty is the convolution identity
    std::mt19937_64 rng(7);
    const BlockVector c = random_vector(rng, g4, 2, 5);
    CHECK(convolve(c, delta(g4, Block{})) == c);

    CHECK_THROWS_AS(convolve(c, delta(GroundSet(5), Block{})), std::invalid_argument);
}

TEST_CASE("support and foundation") {
    const GroundSet g4(4);
    const BlockVector d = delta(g4, Block{1, 2});
    CHECK(support(d) == std::set<Block>{Block{1, 2}});
    CHECK(foundation(d) == Block{1, 2});
    CHECK(support(BlockVector(g4)).empty());
    CHECK(foundation(BlockVector(g4)) == Block{});
    CHECK(foundation(convolve(dqr(g4, 1, 2), dqr(g4, 3, 4))) == Block{1, 2, 3, 4});
}

TEST_CASE("delete_point") {
    const GroundSet g4(4);
    CHECK(delete_point(delta(g4, Block{1, 4})) == delta(GroundSet(3), Block{1}));
    CHECK(delete_point(delta(g4, Block{1, 2})).is_zero());
    CHECK_THROWS_AS(delete_point(delta(GroundSet(1), Block{1})), std::invalid_argument);

    // commutes with the transform: G(v-1) phi = phi G(v)
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int v = 3 + static_cast<int>(rng() % 5);
        const GroundSet g(v);
        const int l = 1 + static_cast<int>(rng() % v);
        const BlockVector c = random_vector(rng, g, l, 6);
        for (int s = 0; s < l; ++s)
            CHECK(transform(delete_point(c), s) == delete_point(transform(c, s + 1)));
    }
}

TEST_CASE("transform composition identity") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const int v = 3 + static_cast<int>(rng() % 6);  // 3..8
        const GroundSet g(v);
        const int l = 1 + static_cast<int>(rng() % v);
        const BlockVector c = random_vector(rng, g, l, 6);
        for (int s = 0; s <= l; ++s)
            for (int h = s; h <= l; ++h)
                CHECK(transform(transform(c, h), s) == transform(c, s) * binom(l - s, h - s));
    }
}

TEST_CASE("ones transform identity") {
    for (int v = 2; v <= 8; ++v) {
        const GroundSet g(v);
        for (int t = 0; t < v; ++t)
            CHECK(transform(ones(g, t + 1), t) == ones(g, t) * Int(v - t));
    }
}

TEST_CASE("inclusion_rank closed form") {
    CHECK(inclusion_rank(4, 1, 2) == 4);
    CHECK(inclusion_rank(4, 1, 4) == 1);
    CHECK(inclusion_rank(5, 0, 3) == 1);
    for (int v = 1; v <= 8; ++v)
        for (int t = 0; t <= v; ++t)
            for (int l = t; l <= v; ++l) {
                const Int expected = (l <= v - t) ? binom(v, t) : binom(v, l);
                CHECK(Int(inclusion_rank(v, t, l)) == expected);
            }
    CHECK_THROWS_AS(inclusion_rank(17, 2, 3), std::length_error);
}

TEST_CASE("zero coefficients are never stored") {
    const GroundSet g4(4);
    std::map<Block, Int> entries;
    entries.emplace(Block{1}, 0);
    entries.emplace(Block{2}, 5);
    const BlockVector c(g4, std::move(entries));
    CHECK(c.entries().size() == 1);
    CHECK((c - c).is_zero());
    CHECK((c * Int(0)).is_zero());
}
