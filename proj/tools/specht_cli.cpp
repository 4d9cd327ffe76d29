// Command-line front end: construct integral designs and cohomology
// witnesses, verify them, and run the acceptance grid.

#include "specht/designs.hpp"
#include "specht/hemmer.hpp"
#include "specht/json_io.hpp"
#include "specht/selftest.hpp"
#include "specht/witnesses.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace specht;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct Output {
    bool json = false;
    std::string out_path;

    void emit(const std::string& text) const {
        if (out_path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(out_path, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot open output file: " + out_path);
        f << text;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string format_block(const Block& b) {
    std::string s;
    for (int e : b.elements()) {
        if (!s.empty())
            s += ' ';
        s += std::to_string(e);
    }
    return s.empty() ? "-" : s;
}

std::string format_tabloid(const Tabloid& t) {
    std::string s;
    for (size_t j = 0; j < t.rows.size(); ++j) {
        if (j)
            s += " / ";
        s += format_block(t.rows[j]);
    }
    return s.empty() ? "()" : s;
}

std::string block_vector_table(const BlockVector& c) {
    size_t width = 1;
    for (const auto& [b, coeff] : c.entries())
        width = std::max(width, coeff.str().size());
    std::ostringstream os;
    for (const auto& [b, coeff] : c.entries())
        os << std::setw(static_cast<int>(width) + 1) << coeff.str() << " | " << format_block(b)
           << "\n";
    return os.str();
}

std::string tabloid_vector_table(const TabloidVector& u) {
    size_t width = 1;
    for (const auto& [t, coeff] : u.entries())
        width = std::max(width, coeff.str().size());
    std::ostringstream os;
    for (const auto& [t, coeff] : u.entries())
        os << std::setw(static_cast<int>(width) + 1) << coeff.str() << " | "
           << format_tabloid(t) << "\n";
    return os.str();
}

std::string report_table(const HemmerReport& report) {
    std::ostringstream os;
    os << " (i,v)  multiple  scalar\n";
    for (const auto& e : report.entries)
        os << " (" << e.i << "," << e.v << ")  " << (e.is_multiple_of_f ? "yes     " : "no      ")
           << "  " << (e.is_multiple_of_f ? std::to_string(e.scalar) : std::string("-")) << "\n";
    os << "condition (i):  " << (report.condition_i ? "true" : "false") << "\n";
    os << "condition (ii): " << (report.condition_ii ? "true" : "false") << "\n";
    os << "verdict:        " << (report.verdict ? "true" : "false") << "\n";
    return os.str();
}

std::string lambda_string(const Composition& shape) {
    std::string s = "(";
    for (size_t i = 0; i < shape.parts().size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(shape.parts()[i]);
    }
    return s + ")";
}

int emit_witness(const Output& output, const Composition& lambda, const PrimeP& p,
                 const std::string& family, const TabloidVector& u,
                 const std::vector<Int>& scalars, bool exit_by_verdict = true) {
    const HemmerReport report = hemmer_check(u, p);
    if (output.json) {
        output.emit(witness_to_json(lambda, p, family, u, scalars, report) + "\n");
    } else {
        std::ostringstream os;
        os << "family:  " << family << "\n";
        os << "lambda:  " << lambda_string(lambda) << "   p: " << p.value() << "\n";
        os << "scalars:";
        for (const Int& s : scalars)
            os << " " << s.str();
        os << "\n" << report_table(report);
        os << "u (" << u.entries().size() << " tabloids):\n" << tabloid_vector_table(u);
        output.emit(os.str());
    }
    if (!exit_by_verdict)
        return kExitTrue;
    return report.verdict ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integral designs and Specht-module cohomology witnesses"};
    app.require_subcommand(1);
    app.fallthrough();

    Output output;
    uint64_t guard = 0;
    app.add_flag("--json", output.json, "emit JSON instead of tables");
    app.add_option("--out", output.out_path, "write the report to this file instead of stdout");
    app.add_option("--guard", guard, "override the tabloid guard (also: SPECHT_GUARD)");

    // design-construct
    auto* dc = app.add_subcommand("design-construct", "build an integral design");
    int dc_v = 0, dc_l = 0, dc_t = 0;
    std::string dc_lambda0 = "1";
    dc->add_option("--v", dc_v, "ground set size")->required();
    dc->add_option("--l", dc_l, "block size")->required();
    dc->add_option("--t", dc_t, "design strength")->required();
    dc->add_option("--lambda0", dc_lambda0, "lambda_0 (decimal)")->required();

    // design-verify
    auto* dv = app.add_subcommand("design-verify", "verify a design JSON file");
    std::string dv_in;
    dv->add_option("--in", dv_in, "design JSON file")->required();

    // u-case1
    auto* c1 = app.add_subcommand("u-case1", "witness for shape (r p^n, p^n)");
    int64_t c1_p = 3, c1_r = 1;
    int c1_n = 1;
    c1->add_option("--p", c1_p, "odd prime")->required();
    c1->add_option("--n", c1_n, "exponent n >= 1")->required();
    c1->add_option("--r", c1_r, "multiplier r")->required();

    // u-case2
    auto* c2 = app.add_subcommand("u-case2", "witness for shape (a, p^n)");
    int64_t c2_p = 3, c2_a = 2;
    int c2_n = 0;
    c2->add_option("--p", c2_p, "odd prime")->required();
    c2->add_option("--n", c2_n, "exponent n >= 0")->required();
    c2->add_option("--a", c2_a, "first part a")->required();

    // u-main
    auto* um = app.add_subcommand("u-main", "design-based witness for any 2-part shape");
    int64_t um_a = 2, um_b = 1, um_p = 3;
    um->add_option("--a", um_a, "first part")->required();
    um->add_option("--b", um_b, "second part")->required();
    um->add_option("--p", um_p, "odd prime")->required();

    // hemmer-check
    auto* hc = app.add_subcommand("hemmer-check", "run the criterion on a tabloid vector");
    std::string hc_in;
    int64_t hc_p = 3;
    hc->add_option("--in", hc_in, "tabloid vector JSON file")->required();
    hc->add_option("--p", hc_p, "odd prime")->required();

    // dims
    auto* dm = app.add_subcommand("dims", "dimension formulas for a shape");
    std::vector<int64_t> dm_parts;
    dm->add_option("--parts", dm_parts, "shape parts, e.g. --parts 3 2 1")
        ->required()
        ->expected(-1);

    // search3
    auto* s3 = app.add_subcommand("search3", "3-part nullspace witness search");
    int64_t s3_a = 2, s3_b = 1, s3_c = 1, s3_p = 3;
    s3->add_option("--a", s3_a, "first part")->required();
    s3->add_option("--b", s3_b, "second part")->required();
    s3->add_option("--c", s3_c, "third part")->required();
    s3->add_option("--p", s3_p, "odd prime")->required();

    // selftest
    auto* st = app.add_subcommand("selftest", "run the full acceptance grid");
    uint64_t st_seed = 0;
    st->add_option("--seed", st_seed, "seed for the property spot-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (guard > 0)
            set_tabloid_guard(guard);

        if (dc->parsed()) {
            const DesignParams params = admissible(dc_v, dc_l, dc_t, Int(dc_lambda0));
            const BlockVector c = construct_design(params);
            if (output.json) {
                output.emit(design_to_json(params, c) + "\n");
            } else {
                std::ostringstream os;
                os << "design v=" << params.v << " l=" << params.l << " t=" << params.t
                   << "\nlambdas:";
                for (const Int& l : params.lambdas)
                    os << " " << l.str();
                os << "\nblocks (" << c.entries().size() << "):\n" << block_vector_table(c);
                os << "verified: true\n";
                output.emit(os.str());
            }
            return kExitTrue;
        }
        if (dv->parsed()) {
            const auto [params, c] = design_from_json(read_file(dv_in));
            const bool ok = verify_design(c, params);
            output.emit(output.json ? std::string("{\"verdict\":") + (ok ? "true" : "false") + "}\n"
                                    : std::string("verdict: ") + (ok ? "true" : "false") + "\n");
            return ok ? kExitTrue : kExitFalse;
        }
        if (c1->parsed()) {
            const Case1Params params(PrimeP(c1_p), c1_n, c1_r);
            const TabloidVector u = case1_u(params);
            const std::vector<Int> scalars{psi(u, 1, 0).coefficient_sum()};
            return emit_witness(output, params.lambda(), params.p, "case1", u, scalars);
        }
        if (c2->parsed()) {
            const Case2Params params(PrimeP(c2_p), c2_n, c2_a);
            const TabloidVector u = case2_u(params);
            std::vector<Int> scalars;
            for (int64_t v = 0; v < params.p_pow_n(); ++v)
                scalars.push_back(binom(params.a - v, params.p_pow_n() - v));
            return emit_witness(output, params.lambda(), params.p, "case2", u, scalars);
        }
        if (um->parsed()) {
            const PrimeP p(um_p);
            const MainWitness w = main_u(um_a, um_b, p);
            return emit_witness(output, w.u.shape(), p, "main", w.u, w.scalars,
                                /*exit_by_verdict=*/false);
        }
        if (hc->parsed()) {
            const PrimeP p(hc_p);
            const TabloidVector u = tabloid_vector_from_json(read_file(hc_in));
            const HemmerReport report = hemmer_check(u, p);
            output.emit(output.json ? to_json(report) + "\n" : report_table(report));
            return report.verdict ? kExitTrue : kExitFalse;
        }
        if (dm->parsed()) {
            const Composition shape(dm_parts);
            std::ostringstream os;
            if (output.json) {
                std::string s = "{\"dim_m\":\"" + dim_m(shape).str() + "\"";
                if (shape.is_partition())
                    s += ",\"dim_specht\":\"" + dim_specht(shape).str() + "\"";
                if (dm_parts.size() == 3 && dm_parts[0] >= dm_parts[1] &&
                    dm_parts[1] >= dm_parts[2] && dm_parts[2] >= 1) {
                    const ThreePartDims d = three_part_dim_check(dm_parts[0], dm_parts[1],
                                                                 dm_parts[2]);
                    s += ",\"three_part\":{\"lhs\":\"" + d.lhs.str() + "\",\"rhs\":\"" +
                         d.rhs.str() + "\",\"holds\":" + (d.holds ? "true" : "false") + "}";
                }
                os << s << "}\n";
            } else {
                os << "shape: " << lambda_string(shape) << "\n";
                os << "dim M: " << dim_m(shape).str() << "\n";
                if (shape.is_partition())
                    os << "dim S: " << dim_specht(shape).str() << "\n";
                if (dm_parts.size() == 3 && dm_parts[0] >= dm_parts[1] &&
                    dm_parts[1] >= dm_parts[2] && dm_parts[2] >= 1) {
                    const ThreePartDims d = three_part_dim_check(dm_parts[0], dm_parts[1],
                                                                 dm_parts[2]);
                    os << "three-part: " << d.lhs.str() << (d.holds ? " < " : " !< ")
                       << d.rhs.str() << "\n";
                }
            }
            output.emit(os.str());
            return kExitTrue;
        }
        if (s3->parsed()) {
            const PrimeP p(s3_p);
            const auto found = three_part_search(s3_a, s3_b, s3_c, p);
            if (!found) {
                output.emit(output.json ? "{\"found\":false}\n" : "none\n");
                return kExitFalse;
            }
            std::vector<Int> scalars;
            for (int64_t v = 0; v < s3_b; ++v)
                scalars.push_back(psi(*found, 1, v).is_zero()
                                      ? Int(0)
                                      : psi(*found, 1, v).entries().begin()->second);
            for (int64_t w = 0; w < s3_c; ++w)
                scalars.push_back(psi(*found, 2, w).is_zero()
                                      ? Int(0)
                                      : psi(*found, 2, w).entries().begin()->second);
            // found = success: the search contract is condition (i), which
            // holds by construction; the full verdict is informational
            return emit_witness(output, found->shape(), p, "search3", *found, scalars,
                                /*exit_by_verdict=*/false);
        }
        if (st->parsed()) {
            std::ostringstream os;
            const auto results = run_selftest(os, st_seed);
            output.emit(os.str());
            return all_passed(results) ? kExitTrue : kExitFalse;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return kExitGuard;
    }
    return kExitUsage;
}
