#include "specht/selftest.hpp"

#include "specht/designs.hpp"
#include "specht/hemmer.hpp"
#include "specht/linalg.hpp"
#include "specht/witnesses.hpp"

#include <bit>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace specht {

namespace {

struct Failure {
    std::string detail;
};

void require(bool cond, const std::string& detail) {
    if (!cond)
        throw Failure{detail};
}

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

// ---------------------------------------------------------------- criterion 1

std::string criterion_lucas_kummer() {
    for (int64_t pv : {3, 5, 7}) {
        const PrimeP p(pv);
        std::vector<std::vector<Int>> pascal(201);
        for (int64_t a = 0; a <= 200; ++a) {
            pascal[a].resize(a + 1);
            pascal[a][0] = 1;
            for (int64_t b = 1; b < a; ++b)
                pascal[a][b] = pascal[a - 1][b - 1] + pascal[a - 1][b];
            pascal[a][a] = 1;
        }
        for (int64_t a = 0; a <= 200; ++a)
            for (int64_t b = 0; b <= a; ++b)
                require(binom_mod_p(a, b, p) == pascal[a][b] % pv,
                        "binom_mod_p(" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(pv) + ") disagrees with direct computation");
        for (int64_t x = 0; x <= 200; ++x)
            for (int64_t y = (x == 0 ? 1 : 0); x + y <= 200; ++y)
                require(kummer_carries(x, y, p) == vp(pascal[x + y][x], p),
                        "kummer_carries(" + std::to_string(x) + "," + std::to_string(y) + "," +
                            std::to_string(pv) + ") != vp(binom)");
    }
    return "p in {3,5,7}, all a <= 200";
}

// ---------------------------------------------------------------- criterion 2

std::string criterion_design_grid() {
    int cases = 0;
    for (int v = 4; v <= 9; ++v)
        for (int l = 1; l < v; ++l)
            for (int t = 0; t <= std::min(3, l); ++t) {
                // minimal positive lambda0: clear the denominators of
                // lambda_s / lambda_0 = C(l,s)/C(v,s)
                Int lambda0 = 1;
                for (int s = 1; s <= t; ++s) {
                    const Rat ratio(binom(l, s), binom(v, s));
                    lambda0 = lcm(lambda0, denominator(ratio));
                }
                const DesignParams params = admissible(v, l, t, lambda0);
                const BlockVector c = construct_design(params);
                require(verify_design(c, params),
                        "construct_design fails verify_design at v=" + std::to_string(v) +
                            " l=" + std::to_string(l) + " t=" + std::to_string(t));
                const BlockVector oracle = solve_design_oracle(params);
                require(verify_design(oracle, params),
                        "oracle fails verify_design at v=" + std::to_string(v) +
                            " l=" + std::to_string(l) + " t=" + std::to_string(t));
                const BlockVector diff = c - oracle;
                for (int s = 0; s <= t; ++s)
                    require(transform(diff, s).is_zero(),
                            "construct/oracle difference is not a null design at v=" +
                                std::to_string(v) + " l=" + std::to_string(l) +
                                " t=" + std::to_string(t));
                ++cases;
            }
    require(cases >= 50, "enumeration produced only " + std::to_string(cases) + " cases");
    return std::to_string(cases) + " admissible cases, v <= 9, t <= 3";
}

// ---------------------------------------------------------------- criterion 3

std::string criterion_null_basis() {
    int checked = 0;
    for (int v = 1; v <= 8; ++v)
        for (int t = 0; t <= v; ++t)
            for (int l = t + 1; l <= v - t; ++l) {
                const Int expected = binom(v, l) - binom(v, t);
                const auto pods = null_basis(v, t, l);  // rank-verified internally
                require(Int(static_cast<int64_t>(pods.size())) == expected,
                        "null_basis(" + std::to_string(v) + "," + std::to_string(t) + "," +
                            std::to_string(l) + ") size " + std::to_string(pods.size()) +
                            " != " + expected.str());
                ++checked;
            }
    return std::to_string(checked) + " (v,t,l) triples, v <= 8";
}

// ---------------------------------------------------------------- criterion 4

std::string criterion_case1_witnesses() {
    std::vector<std::string> problems;

    // (p, r, n) = (3, 1, 1): lambda = (3,3), 20 tabloids.
    const Case1Params params(PrimeP(3), 1, 1);
    const TabloidVector u = case1_u(params);
    require(tabloid_count(u.shape()) == 20, "(3,1,1): expected 20 tabloids");
    const Int s0 = psi(u, 1, 0).coefficient_sum();
    require(s0 % 3 == 1, "(3,1,1): psi_{1,0} scalar " + s0.str() + " != 1 mod 3");
    for (int64_t s = 1; s <= 2; ++s)
        require(reduce_mod(psi(u, 1, s), params.p).is_zero(),
                "(3,1,1): psi_{1," + std::to_string(s) + "} does not vanish mod 3");
    require(hemmer_check(u, params.p).verdict, "(3,1,1): hemmer verdict is false");
    if (s0 != 4)
        problems.push_back("(3,1,1): expected exact psi_{1,0} scalar 4, but the defining sum"
                           " gives " +
                           s0.str() +
                           " = sum over i of (i+1) C(2,i) C(4,3-i); 4 = C(rp^n+1, p^n) is only"
                           " its value mod 3");

    // (p, r, n) = (3, 3, 1): lambda = (9,3), 220 tabloids.
    try {
        const Case1Params p331(PrimeP(3), 1, 3);
        const TabloidVector u2 = case1_u(p331);
        const Int s0b = psi(u2, 1, 0).coefficient_sum();
        require(s0b % 3 != 0, "(3,3,1): psi_{1,0} scalar vanishes mod 3");
        require(hemmer_check(u2, p331.p).verdict, "(3,3,1): hemmer verdict is false");
    } catch (const std::invalid_argument&) {
        // Parameters rejected (3 divides r).  Measure what the defining sum
        // would do over lambda = (9,3) anyway.
        const Composition shape({9, 3});
        std::map<Tabloid, Int> entries;
        for_each_block(12, 3, [&](Block row2) {
            const int i = std::popcount(row2.mask() & 0x3u);  // {1,2}
            entries.emplace(Tabloid{{row2}}, i + 1);
        });
        const TabloidVector u2(shape, std::move(entries));
        const Int s0b = psi(u2, 1, 0).coefficient_sum();
        bool higher_vanish = true;
        for (int64_t s = 1; s <= 2; ++s)
            if (!reduce_mod(psi(u2, 1, s), PrimeP(3)).is_zero())
                higher_vanish = false;
        problems.push_back(
            "(3,3,1): rejected, 3 divides r = 3 (the two-p-power theorem requires p not"
            " dividing r); the defining sum over lambda=(9,3) has psi_{1,0} scalar " +
            s0b.str() + " = " + Int(s0b % 3).str() + " mod 3" +
            (higher_vanish ? " and psi_{1,1}, psi_{1,2} = 0 mod 3" : "") +
            ", so every image vanishes mod 3 and condition (i) is unsatisfiable");
    }

    if (!problems.empty()) {
        std::string joined;
        for (size_t k = 0; k < problems.size(); ++k)
            joined += (k ? " | " : "") + problems[k];
        throw Failure{joined};
    }
    return "witnesses verified at (3,1,1) and (3,3,1)";
}

// ---------------------------------------------------------------- criterion 5

std::string criterion_a_coefficients() {
    const Case1Params base(PrimeP(3), 1, 1);
    require(a_coefficient(1, 0, base) == 18, "A_{1,0} != 18 at (3,1,1)");
    require(a_coefficient(1, 1, base) == 24, "A_{1,1} != 24 at (3,1,1)");
    require(a_coefficient(1, 1, base) - a_coefficient(1, 0, base) == binom(4, 2),
            "A_{1,1} - A_{1,0} != C(4,2) at (3,1,1)");
    int grid = 0;
    for (int64_t pv : {3, 5}) {
        for (int64_t r = 1; r <= 4; ++r) {
            if (r % pv == 0 || (r + 1) % pv == 0)
                continue;
            const Case1Params params(PrimeP(pv), 1, r);
            const int64_t pn = params.p_pow_n();
            for (int64_t s = 1; s < pn; ++s) {
                require(a_coefficient(s, s - 1, params) % pv == 0,
                        "A_{s,s-1} != 0 mod p at p=" + std::to_string(pv) +
                            " r=" + std::to_string(r) + " s=" + std::to_string(s));
                for (int64_t t = 1; t <= s; ++t) {
                    const Int diff =
                        a_coefficient(s, t, params) - a_coefficient(s, t - 1, params);
                    const Int expected = binom((r + 1) * pn - s - 1, r * pn - 1);
                    require(diff == expected, "difference formula fails at p=" +
                                                  std::to_string(pv) + " r=" + std::to_string(r) +
                                                  " s=" + std::to_string(s) +
                                                  " t=" + std::to_string(t));
                    require(diff % pv == 0, "difference not divisible by p");
                    require(kummer_carries(r * pn - 1, pn - s, params.p) >= 1,
                            "no carry adding rp^n-1 and p^n-s");
                }
            }
            ++grid;
        }
    }
    return "exact values at (3,1,1); both claims on " + std::to_string(grid) +
           " valid (p,r) pairs, n=1, r <= 4";
}

// ---------------------------------------------------------------- criterion 6

std::string criterion_case2_witness() {
    const Case2Params params(PrimeP(3), 1, 8);
    const TabloidVector u = case2_u(params);
    require(tabloid_count(u.shape()) == 165, "(3,1,8): expected 165 tabloids");
    const Int expected_scalars[3] = {56, 21, 6};
    const int64_t expected_residues[3] = {2, 0, 0};
    for (int64_t v = 0; v <= 2; ++v) {
        const TabloidVector image = psi(u, 1, v);
        Int scalar = 0;
        for (const auto& [t, c] : image.entries()) {
            require(scalar == 0 || scalar == c, "(3,1,8): image coefficients not constant");
            scalar = c;
        }
        require(scalar == expected_scalars[v],
                "(3,1,8): psi_{1," + std::to_string(v) + "} scalar " + scalar.str() +
                    " != " + expected_scalars[v].str());
        require(scalar % 3 == expected_residues[v], "(3,1,8): wrong residue mod 3");
    }
    require(hemmer_check(u, params.p).verdict, "(3,1,8): hemmer verdict is false");
    return "scalars (56,21,6), residues (2,0,0), verdict true over 165 tabloids";
}

// ---------------------------------------------------------------- criterion 7

std::string criterion_main_grid() {
    int cases = 0;
    for (int64_t pv : {3, 5}) {
        const PrimeP p(pv);
        for (int64_t a = 1; a <= 9; ++a)
            for (int64_t b = 1; b <= a && a + b <= 10; ++b) {
                const MainWitness w = main_u(a, b, p);
                bool some_nonzero = false;
                for (int64_t v = 0; v < b; ++v) {
                    const Composition target({a + b - v, v});
                    require(psi(w.u, 1, v) == f_lambda(target) * w.scalars[v],
                            "psi != lambda_v f_v at a=" + std::to_string(a) +
                                " b=" + std::to_string(b) + " p=" + std::to_string(pv) +
                                " v=" + std::to_string(v));
                    if (w.scalars[v] % pv != 0)
                        some_nonzero = true;
                }
                require(some_nonzero, "all scalars vanish mod p at a=" + std::to_string(a) +
                                          " b=" + std::to_string(b) + " p=" + std::to_string(pv));
                if (a == 3 && b == 2 && pv == 3)
                    require(w.scalars[0] == 10 && w.scalars[1] == 4,
                            "(3,2,3): scalars != (10,4)");
                ++cases;
            }
    }
    return std::to_string(cases) + " (a,b,p) tuples, a+b <= 10, p in {3,5}";
}

// ---------------------------------------------------------------- criterion 8

std::string criterion_kernel_h0() {
    int checked = 0;
    for (int64_t n = 1; n <= 7; ++n)
        for (const auto& parts : partitions_of(n)) {
            const Composition lambda(parts);
            const Int expected = dim_specht(lambda);
            const int64_t nullity = stacked_psi_nullity(lambda);
            require(Int(nullity) == expected, "stacked psi nullity " + std::to_string(nullity) +
                                                  " != hook dimension " + expected.str());
            const TabloidVector f = f_lambda(lambda);
            for (int64_t pv : {3, 5, 7}) {
                const PrimeP p(pv);
                require(h0_nonzero(lambda, p) == in_specht(f, p),
                        "h0_nonzero disagrees with the fixed-vector computation at p=" +
                            std::to_string(pv));
            }
            ++checked;
        }
    return std::to_string(checked) + " partitions of n <= 7";
}

// ---------------------------------------------------------------- criterion 9

std::string criterion_three_part() {
    int checked = 0;
    for (int64_t a = 1; a <= 11; ++a)
        for (int64_t b = 1; b <= a && a + b <= 12; ++b) {
            const ThreePartDims dims = three_part_dim_check(a, b, 1);
            require(dims.holds, "inequality fails at (" + std::to_string(a) + "," +
                                    std::to_string(b) + ",1): " + dims.lhs.str() +
                                    " !< " + dims.rhs.str());
            if (a == 3 && b == 2)
                require(dims.lhs == 76 && dims.rhs == 96, "(3,2,1): expected 76 < 96, got " +
                                                              dims.lhs.str() + " < " +
                                                              dims.rhs.str());
            ++checked;
        }
    return std::to_string(checked) + " shapes (a,b,1), a+b <= 12; (3,2,1) gives 76 < 96";
}

// ------------------------------------------------------- seeded property row

std::string seeded_properties(uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto random_vector = [&](const GroundSet& g, int l, int terms) {
        std::map<Block, Int> entries;
        std::vector<Block> blocks;
        for_each_block(g.v(), l, [&](Block b) { blocks.push_back(b); });
        for (int k = 0; k < terms; ++k) {
            const Block b = blocks[rng() % blocks.size()];
            const int64_t coeff = static_cast<int64_t>(rng() % 19) - 9;
            Int& slot = entries[b];
            slot += coeff;
            if (slot == 0)
                entries.erase(b);
        }
        return BlockVector(g, std::move(entries));
    };
    for (int trial = 0; trial < 12; ++trial) {
        const int v = 4 + static_cast<int>(rng() % 5);  // 4..8
        const GroundSet g(v);
        const int l = 1 + static_cast<int>(rng() % v);
        const BlockVector c = random_vector(g, l, 6);
        // transform composition (binomial scaling identity)
        for (int s = 0; s < l; ++s)
            for (int h = s; h <= l; ++h)
                if (transform(transform(c, h), s) != transform(c, s) * binom(l - s, h - s))
                    return "transform composition identity FAILED (seed " +
                           std::to_string(seed) + ")";
        // point deletion commutes with the transform
        if (v > 1)
            for (int s = 0; s < l; ++s)
                if (transform(delete_point(c), s) != delete_point(transform(c, s + 1)))
                    return "delete_point commutation FAILED (seed " + std::to_string(seed) + ")";
    }
    return "transform/deletion identities on 12 seeded vectors";
}

CriterionResult run_one(std::ostream& out, int id, const std::string& name,
                        const std::function<std::string()>& fn) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    try {
        r.detail = fn();
        r.pass = true;
    } catch (const Failure& f) {
        r.pass = false;
        r.detail = f.detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("unexpected error: ") + e.what();
    }
    out << (r.pass ? "ok  " : "FAIL") << std::setw(3) << r.id << " " << r.name;
    if (!r.detail.empty())
        out << ": " << r.detail;
    out << "\n";
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_grid(std::ostream& out, uint64_t seed) {
    std::vector<CriterionResult> results;
    results.push_back(run_one(out, 1, "lucas-kummer-suite", criterion_lucas_kummer));
    results.push_back(run_one(out, 2, "design-constructor-grid", criterion_design_grid));
    results.push_back(run_one(out, 3, "null-basis-dimension", criterion_null_basis));
    results.push_back(run_one(out, 4, "two-p-power-case1-witnesses", criterion_case1_witnesses));
    results.push_back(run_one(out, 5, "a-coefficient-identities", criterion_a_coefficients));
    results.push_back(run_one(out, 6, "two-p-power-case2-witness", criterion_case2_witness));
    results.push_back(run_one(out, 7, "main-theorem-grid", criterion_main_grid));
    results.push_back(run_one(out, 8, "kernel-h0-cross-checks", criterion_kernel_h0));
    results.push_back(run_one(out, 9, "three-part-inequality", criterion_three_part));
    results.push_back(
        run_one(out, 0, "seeded-properties", [seed] { return seeded_properties(seed); }));
    return results;
}

std::vector<CriterionResult> run_selftest(std::ostream& out, uint64_t seed) {
    std::ostringstream first;
    std::vector<CriterionResult> results = run_acceptance_grid(first, seed);
    out << first.str();

    std::ostringstream second;
    run_acceptance_grid(second, seed);
    const bool identical = first.str() == second.str();
    CriterionResult det;
    det.id = 10;
    det.name = "selftest-determinism";
    det.pass = identical;
    det.detail = identical ? "two grid runs produced byte-identical reports"
                           : "grid reports differ between runs";
    out << (det.pass ? "ok  " : "FAIL") << std::setw(3) << det.id << " " << det.name << ": "
        << det.detail << "\n";
    results.push_back(det);
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass)
            return false;
    return true;
}

}  // namespace specht
