#include "specht/designs.hpp"

#include "specht/linalg.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace specht;

TEST_CASE("admissible parameter chains") {
    const DesignParams fano = admissible(7, 3, 2, 7);
    CHECK(fano.lambdas == std::vector<Int>{7, 3, 1});

    const DesignParams pair = admissible(5, 2, 1, 10);
    CHECK(pair.lambdas == std::vector<Int>{10, 4});

    CHECK_THROWS_WITH_AS(admissible(4, 2, 1, 1), doctest::Contains("s = 0"),
                         std::invalid_argument);
    CHECK_THROWS_AS(DesignParams(4, 2, 1, {Int(1), Int(1)}), std::invalid_argument);
}

TEST_CASE("pod vectors") {
    const GroundSet g4(4);
    const Pod single{{1}, {2}, Block{}};
    CHECK(pod_vector(g4, single) == dqr(g4, 1, 2));

    const Pod two{{1, 3}, {2, 4}, Block{}};
    const BlockVector v = pod_vector(g4, two);
    CHECK(v.entries().size() == 4);
    CHECK(v.coefficient(Block{1, 3}) == 1);
    CHECK(v.coefficient(Block{1, 4}) == -1);
    CHECK(v.coefficient(Block{2, 3}) == -1);
    CHECK(v.coefficient(Block{2, 4}) == 1);

    // any pod transforms to zero at levels <= t
    const GroundSet g7(7);
    const Pod padded{{1, 4}, {2, 6}, Block{3}};
    CHECK(padded.t() == 1);
    CHECK(padded.l() == 3);
    const BlockVector pv = pod_vector(g7, padded);
    CHECK(pv.constant_block_size() == 3);
    CHECK(transform(pv, 0).is_zero());
    CHECK(transform(pv, 1).is_zero());
    CHECK_FALSE(transform(pv, 2).is_zero());

    CHECK_THROWS_AS(pod_vector(g4, Pod{{1}, {1}, Block{}}), std::invalid_argument);
    CHECK_THROWS_AS(pod_vector(g4, Pod{{1}, {2}, Block{2}}), std::invalid_argument);
}

TEST_CASE("pod lift identity") {
    // transform(pod * delta_x, t+1) = pod when x avoids the foundation
    for (int v = 4; v <= 7; ++v) {
        const GroundSet g(v);
        const Pod base{{1}, {2}, Block{}};  // (0,1)-pod
        const BlockVector bv = pod_vector(g, base);
        for (int x = 3; x <= v; ++x) {
            Pod lifted = base;
            lifted.x = Block{x};
            CHECK(transform(pod_vector(g, lifted), 1) == bv);
        }
    }
    const GroundSet g7(7);
    const Pod base{{1, 3}, {2, 4}, Block{}};  // (1,2)-pod
    Pod lifted = base;
    lifted.x = Block{5};
    CHECK(transform(pod_vector(g7, lifted), 2) == pod_vector(g7, base));
}

TEST_CASE("null_basis sizes and contents") {
    const auto b412 = null_basis(4, 1, 2);
    CHECK(b412.size() == 2);

    const auto b723 = null_basis(7, 2, 3);
    CHECK(b723.size() == 14);  // C(7,3) - C(7,2) = 35 - 21

    const auto b301 = null_basis(3, 0, 1);
    REQUIRE(b301.size() == 2);
    const GroundSet g3(3);
    CHECK(pod_vector(g3, b301[0]) == dqr(g3, 1, 2));
    CHECK(pod_vector(g3, b301[1]) == dqr(g3, 1, 3));

    CHECK(null_basis(4, 2, 2).empty());  // t >= l
    CHECK(null_basis(5, 2, 3).empty());  // l = v - t, dimension 0
    CHECK(null_basis(4, 3, 2).empty());  // formula negative
}

TEST_CASE("null design properties on pods") {
    // convolution of null designs with disjoint foundations (strength t+s+1)
    const GroundSet g8(8);
    const Pod a{{1}, {2}, Block{3}};  // (0,2)-pod on {1,2,3}
    const Pod b{{4}, {5}, Block{}};   // (0,1)-pod on {4,5}
    const BlockVector prod = convolve(pod_vector(g8, a), pod_vector(g8, b));
    CHECK(prod.constant_block_size() == 3);
    for (int s = 0; s <= 1; ++s)  // strength t + s + 1 = 1
        CHECK(transform(prod, s).is_zero());
    CHECK_FALSE(transform(prod, 2).is_zero());

    // foundation of a nonzero null design has at least t + l + 1 points
    const auto pods = null_basis(6, 1, 2);
    for (const auto& p : pods)
        CHECK(foundation(pod_vector(GroundSet(6), p)).size() >= 1 + 2 + 1);
    // ... and of random integer combinations of pods
    BlockVector combo(GroundSet(6));
    Int mult = 1;
    for (const auto& p : pods) {
        combo = combo + pod_vector(GroundSet(6), p) * mult;
        mult = -mult * 2;
    }
    CHECK_FALSE(combo.is_zero());
    CHECK(transform(combo, 0).is_zero());
    CHECK(transform(combo, 1).is_zero());
    CHECK(foundation(combo).size() >= 4);
}

TEST_CASE("construct_design base and small cases") {
    // base case t = 0: lambda0 copies of the first block
    const DesignParams base = admissible(4, 1, 0, 3);
    const BlockVector c0 = construct_design(base);
    CHECK(verify_design(c0, base));
    CHECK(c0 == delta(GroundSet(4), Block{1}) * Int(3));

    // Fano parameters
    const DesignParams fano = admissible(7, 3, 2, 7);
    const BlockVector fano_c = construct_design(fano);
    CHECK(verify_design(fano_c, fano));

    const DesignParams pair = admissible(5, 2, 1, 10);
    CHECK(verify_design(construct_design(pair), pair));
}

TEST_CASE("construct_design degenerate regimes") {
    // l > v - t: one-dimensional, multiple of e_l
    const DesignParams deg = admissible(4, 3, 2, 4);
    const BlockVector c = construct_design(deg);
    CHECK(verify_design(c, deg));
    CHECK(c == ones(GroundSet(4), 3));

    // l < t: trailing lambdas are forced to zero
    const DesignParams thin = admissible(5, 1, 3, 5);
    CHECK(thin.lambdas == std::vector<Int>{5, 1, 0, 0});
    const BlockVector c2 = construct_design(thin);
    CHECK(verify_design(c2, thin));
    CHECK(c2 == ones(GroundSet(5), 1));

    // l = v: the full block, scalar one
    const DesignParams full(4, 4, 1, {Int(1), Int(1)});
    CHECK(construct_design(full) == ones(GroundSet(4), 4));
}

TEST_CASE("verify_design rejects wrong vectors") {
    const GroundSet g4(4);
    const DesignParams params = admissible(4, 2, 1, 2);
    CHECK(params.lambdas == std::vector<Int>{2, 1});
    // transform of the single block vanishes at {3}, so lambda_1 = 1 fails
    CHECK_FALSE(verify_design(delta(g4, Block{1, 2}), params));

    // the zero vector is a design exactly when all lambdas vanish
    CHECK(verify_design(BlockVector(g4), DesignParams(4, 2, 1, {Int(0), Int(0)})));
    CHECK_FALSE(verify_design(BlockVector(g4), params));

    // Fano plane is a (7,3,(7,3,1))-design
    std::map<Block, Int> entries;
    for (const Block& b : {Block{1, 2, 3}, Block{1, 4, 5}, Block{1, 6, 7}, Block{2, 4, 6},
                           Block{2, 5, 7}, Block{3, 4, 7}, Block{3, 5, 6}})
        entries.emplace(b, 1);
    CHECK(verify_design(BlockVector(GroundSet(7), std::move(entries)), admissible(7, 3, 2, 7)));
}

TEST_CASE("solve_design_oracle") {
    for (const DesignParams& params :
         {admissible(5, 2, 1, 10), admissible(7, 3, 2, 7), admissible(6, 3, 2, 10)}) {
        const BlockVector oracle = solve_design_oracle(params);
        CHECK(verify_design(oracle, params));
        // agreement with the constructor up to a null design
        const BlockVector diff = construct_design(params) - oracle;
        for (int s = 0; s <= params.t; ++s)
            CHECK(transform(diff, s).is_zero());
    }
    CHECK_THROWS_AS(admissible(4, 2, 1, 1), std::invalid_argument);  // inadmissible
    CHECK_THROWS_AS(solve_design_oracle(admissible(15, 1, 0, 1)), std::length_error);
}

TEST_CASE("point deletion maps designs to designs with shifted parameters") {
    // phi of a (v, l, lambda_0..lambda_t)-design is a
    // (v-1, l-1, lambda_1..lambda_t)-design
    for (const DesignParams& params :
         {admissible(7, 3, 2, 7), admissible(6, 3, 2, 10), admissible(8, 4, 1, 2)}) {
        const BlockVector c = construct_design(params);
        const BlockVector shifted = delete_point(c);
        const std::vector<Int> tail(params.lambdas.begin() + 1, params.lambdas.end());
        const DesignParams expected(params.v - 1, params.l - 1, params.t - 1, tail);
        CHECK(verify_design(shifted, expected));
    }
}

TEST_CASE("suspension and extension raise strength and block size") {
    // c in N_{t,l} with foundation avoiding x resp. {q,r}:
    // c * delta_x lands in N_{t,l+|x|}, c * d_qr in N_{t+1,l+1}
    const GroundSet g7(7);
    const Pod base{{1, 3}, {2, 4}, Block{}};  // (1,2)-pod on {1,2,3,4}
    const BlockVector c = pod_vector(g7, base);

    const BlockVector extended = convolve(c, delta(g7, Block{5}));
    CHECK(extended.constant_block_size() == 3);
    for (int s = 0; s <= 1; ++s)
        CHECK(transform(extended, s).is_zero());

    const BlockVector suspended = convolve(c, dqr(g7, 5, 6));
    CHECK(suspended.constant_block_size() == 3);
    for (int s = 0; s <= 2; ++s)
        CHECK(transform(suspended, s).is_zero());
}

TEST_CASE("scaled parameter vectors construct and verify") {
    for (const Int& k : {Int(2), Int(3), Int(-1), Int(12)}) {
        const DesignParams base = admissible(7, 3, 2, 7);
        std::vector<Int> scaled;
        for (const Int& l : base.lambdas)
            scaled.push_back(l * k);
        const DesignParams params(7, 3, 2, scaled);
        const BlockVector c = construct_design(params);
        CHECK(verify_design(c, params));
        const BlockVector diff = c - solve_design_oracle(params);
        for (int s = 0; s <= params.t; ++s)
            CHECK(transform(diff, s).is_zero());
    }
}

TEST_CASE("constructed designs have full foundation") {
    for (const DesignParams& params :
         {admissible(6, 2, 1, 3), admissible(7, 3, 2, 7), admissible(8, 3, 1, 8)}) {
        const BlockVector c = construct_design(params);
        if (params.lambdas[0] != 0)
            CHECK(foundation(c).size() == params.v);
    }
}
