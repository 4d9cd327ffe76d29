#include "specht/designs.hpp"

#include "specht/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace specht {

DesignParams::DesignParams(int v_, int l_, int t_, std::vector<Int> lambdas_)
    : v(v_), l(l_), t(t_), lambdas(std::move(lambdas_)) {
    if (v < 1 || v > GroundSet::kMaxPoints)
        throw std::invalid_argument("DesignParams: v out of range");
    if (t < 0 || t > v || l < 0 || l > v)
        throw std::invalid_argument("DesignParams: need 0 <= t, l <= v");
    if (lambdas.size() != static_cast<size_t>(t) + 1)
        throw std::invalid_argument("DesignParams: expected t+1 lambdas");
    for (int s = 0; s < t; ++s)
        if (Int(v - s) * lambdas[s + 1] != Int(l - s) * lambdas[s])
            throw std::invalid_argument(
                "DesignParams: ratio condition fails at s = " + std::to_string(s) +
                ": (v-s) lambda_{s+1} != (l-s) lambda_s");
}

DesignParams admissible(int v, int l, int t, const Int& lambda0) {
    if (v < 1 || v > GroundSet::kMaxPoints)
        throw std::invalid_argument("admissible: v out of range");
    if (t < 0 || t > v || l < 0 || l > v)
        throw std::invalid_argument("admissible: need 0 <= t, l <= v");
    std::vector<Int> lambdas{lambda0};
    for (int s = 0; s < t; ++s) {
        const Int num = Int(l - s) * lambdas.back();
        const Int den = v - s;
        if (num % den != 0)
            throw std::invalid_argument("admissible: lambda_" + std::to_string(s + 1) +
                                        " = (l-s) lambda_s / (v-s) is not an integer at s = " +
                                        std::to_string(s));
        lambdas.push_back(num / den);
    }
    return DesignParams(v, l, t, std::move(lambdas));
}

Block Pod::foundation_block() const {
    uint32_t mask = x.mask();
    for (int p : p_points)
        mask |= 1u << (p - 1);
    for (int q : q_points)
        mask |= 1u << (q - 1);
    return Block(mask);
}

namespace {

void validate_pod(const GroundSet& ground, const Pod& pod) {
    if (pod.p_points.empty() || pod.p_points.size() != pod.q_points.size())
        throw std::invalid_argument("Pod: need t+1 paired points on each side");
    uint32_t seen = pod.x.mask();
    if (seen & ~ground.full_mask())
        throw std::invalid_argument("Pod: x outside ground set");
    auto take = [&](int p) {
        if (p < 1 || p > ground.v())
            throw std::invalid_argument("Pod: point out of range");
        const uint32_t bit = 1u << (p - 1);
        if (seen & bit)
            throw std::invalid_argument("Pod: points overlap");
        seen |= bit;
    };
    for (size_t i = 0; i < pod.p_points.size(); ++i) {
        take(pod.p_points[i]);
        take(pod.q_points[i]);
    }
}

SparseRow to_sparse_row(const BlockVector& vec) {
    SparseRow row;
    row.reserve(vec.entries().size());
    for (const auto& [b, c] : vec.entries())
        row.emplace_back(colex_rank(b), c);
    return row;
}

// All perfect matchings of the sorted point set, as (p_i, q_i) pairs with
// p_i < q_i and p_0 < p_1 < ...; deterministic DFS order.
void for_each_matching(std::vector<int> points,
                       const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn) {
    std::vector<int> ps, qs;
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& rest) {
        if (rest.empty()) {
            fn(ps, qs);
            return;
        }
        const int p = rest.front();
        for (size_t i = 1; i < rest.size(); ++i) {
            std::vector<int> next;
            for (size_t j = 1; j < rest.size(); ++j)
                if (j != i)
                    next.push_back(rest[j]);
            ps.push_back(p);
            qs.push_back(rest[i]);
            rec(next);
            ps.pop_back();
            qs.pop_back();
        }
    };
    std::sort(points.begin(), points.end());
    rec(points);
}

}  // namespace

BlockVector pod_vector(const GroundSet& ground, const Pod& pod) {
    validate_pod(ground, pod);
    BlockVector acc = delta(ground, pod.x);
    for (size_t i = 0; i < pod.p_points.size(); ++i)
        acc = convolve(acc, dqr(ground, pod.p_points[i], pod.q_points[i]));
    return acc;
}

std::vector<Pod> null_basis(int v, int t, int l) {
    if (v < 1 || v > GroundSet::kMaxPoints)
        throw std::invalid_argument("null_basis: v out of range");
    if (t < 0 || t > v || l < 0 || l > v)
        throw std::invalid_argument("null_basis: levels out of range");
    const Int dim_formula = binom(v, l) - binom(v, t);
    if (dim_formula <= 0 || t >= l)
        return {};
    const auto dim = dim_formula.convert_to<int64_t>();

    const GroundSet ground(v);
    const int found_size = l + t + 1;
    std::vector<Block> foundations;
    for_each_block(v, found_size, [&](Block b) { foundations.push_back(b); });

    std::vector<Pod> chosen;
    std::vector<BlockVector> chosen_vecs;
    SparseEchelon echelon;
    for (const Block& found : foundations) {
        if (static_cast<int64_t>(chosen.size()) == dim)
            break;
        for_each_subset(found, 2 * (t + 1), [&](Block paired) {
            if (static_cast<int64_t>(chosen.size()) == dim)
                return;
            const Block x = found.minus(paired);
            for_each_matching(paired.elements(), [&](const std::vector<int>& ps,
                                                     const std::vector<int>& qs) {
                if (static_cast<int64_t>(chosen.size()) == dim)
                    return;
                Pod pod{ps, qs, x};
                BlockVector vec = pod_vector(ground, pod);
                if (echelon.insert(to_sparse_row(vec))) {
                    chosen.push_back(std::move(pod));
                    chosen_vecs.push_back(std::move(vec));
                }
            });
        });
    }
    if (static_cast<int64_t>(chosen.size()) != dim)
        throw std::logic_error("null_basis: pod enumeration exhausted before reaching dimension");

    // Independent confirmation with a fraction-free integer rank.
    std::vector<Block> cols;
    for_each_block(v, l, [&](Block b) { cols.push_back(b); });
    IntMat m(chosen_vecs.size(), std::vector<Int>(cols.size(), 0));
    for (size_t i = 0; i < chosen_vecs.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            m[i][j] = chosen_vecs[i].coefficient(cols[j]);
    if (exact_rank(std::move(m)) != dim)
        throw std::logic_error("null_basis: exact rank check failed");
    return chosen;
}

bool verify_design(const BlockVector& c, const DesignParams& params) {
    if (c.ground().v() != params.v)
        return false;
    for (const auto& [b, coeff] : c.entries())
        if (b.size() != params.l)
            return false;
    const GroundSet ground(params.v);
    for (int s = 0; s <= params.t; ++s)
        if (transform(c, s) != ones(ground, s) * params.lambdas[s])
            return false;
    return true;
}

namespace {

// Smallest points outside the pod foundation, used to pad a (t', t'+1)-pod
// up to block size l.
Block lift_block(const GroundSet& ground, const Pod& pod, int l) {
    const Block found = pod.foundation_block();
    const int need = l - pod.t() - 1 - pod.x.size();
    std::vector<int> pts;
    for (int p = 1; p <= ground.v() && static_cast<int>(pts.size()) < need; ++p)
        if (!found.contains(p))
            pts.push_back(p);
    if (static_cast<int>(pts.size()) < need)
        throw std::logic_error("construct_design: no room to lift pod");
    return Block(pts);
}

// Direct integral solve of transform(d, level) = r over block-size-l
// vectors.  Any solution is automatically a null design at levels < level
// because r is.
BlockVector lift_by_integer_solve(const GroundSet& ground, const BlockVector& r, int level, int l) {
    std::vector<Block> rows, cols;
    for_each_block(ground.v(), level, [&](Block b) { rows.push_back(b); });
    for_each_block(ground.v(), l, [&](Block b) { cols.push_back(b); });
    IntMat a(rows.size(), std::vector<Int>(cols.size(), 0));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            if (rows[i].subset_of(cols[j]))
                a[i][j] = 1;
    std::vector<Int> b(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        b[i] = r.coefficient(rows[i]);
    auto x = solve_integer(a, b);
    if (!x)
        throw std::logic_error("construct_design: lift has no integral solution");
    std::map<Block, Int> entries;
    for (size_t j = 0; j < cols.size(); ++j)
        if ((*x)[j] != 0)
            entries.emplace(cols[j], (*x)[j]);
    return BlockVector(ground, std::move(entries));
}

}  // namespace

BlockVector construct_design(const DesignParams& params) {
    const GroundSet ground(params.v);
    const int v = params.v, l = params.l, t = params.t;

    if (t >= l || l > v - t) {
        // One-dimensional regime: the design must be a scalar multiple of e_l.
        const int s_star = std::min(t, l);
        const Int denom = binom(v - s_star, l - s_star);
        if (params.lambdas[s_star] % denom != 0)
            throw std::invalid_argument(
                "construct_design: degenerate regime admits no integer multiple of e_l");
        const BlockVector c = ones(ground, l) * (params.lambdas[s_star] / denom);
        if (!verify_design(c, params))
            throw std::invalid_argument(
                "construct_design: degenerate regime admits no integer multiple of e_l");
        return c;
    }

    std::vector<int> first(l);
    for (int i = 0; i < l; ++i)
        first[i] = i + 1;
    BlockVector c = delta(ground, Block(first)) * params.lambdas[0];

    for (int tp = 0; tp < t; ++tp) {
        const int level = tp + 1;
        const BlockVector r = transform(c, level) - ones(ground, level) * params.lambdas[level];
        if (r.is_zero())
            continue;
        if (!transform(r, tp).is_zero())
            throw std::logic_error("construct_design: residual is not a null design");

        const std::vector<Pod> pods = null_basis(v, tp, level);
        // Express r over the pod vectors (unique rational coordinates).
        std::vector<Block> coords;
        for_each_block(v, level, [&](Block b) { coords.push_back(b); });
        IntMat a(coords.size(), std::vector<Int>(pods.size(), 0));
        std::vector<BlockVector> pod_vecs;
        pod_vecs.reserve(pods.size());
        for (size_t k = 0; k < pods.size(); ++k) {
            pod_vecs.push_back(pod_vector(ground, pods[k]));
            for (size_t i = 0; i < coords.size(); ++i)
                a[i][k] = pod_vecs.back().coefficient(coords[i]);
        }
        std::vector<Int> rhs(coords.size());
        for (size_t i = 0; i < coords.size(); ++i)
            rhs[i] = r.coefficient(coords[i]);

        auto coeffs = solve_rational(a, rhs);
        if (!coeffs)
            throw std::logic_error("construct_design: residual outside pod span");
        bool integral = true;
        for (const Rat& q : *coeffs)
            if (denominator(q) != 1) {
                integral = false;
                break;
            }

        BlockVector d(ground);
        if (integral) {
            for (size_t k = 0; k < pods.size(); ++k) {
                const Int n_k = numerator((*coeffs)[k]);
                if (n_k == 0)
                    continue;
                Pod lifted = pods[k];
                lifted.x = lifted.x.unite(lift_block(ground, pods[k], l));
                d = d + pod_vector(ground, lifted) * n_k;
            }
        } else {
            d = lift_by_integer_solve(ground, r, level, l);
        }
        c = c - d;
    }

    if (!verify_design(c, params))
        throw std::logic_error("construct_design: internal verification failed");
    return c;
}

BlockVector solve_design_oracle(const DesignParams& params) {
    if (params.v > 14)
        throw std::length_error("solve_design_oracle: guarded at v <= 14");
    const GroundSet ground(params.v);
    std::vector<Block> cols;
    for_each_block(params.v, params.l, [&](Block b) { cols.push_back(b); });

    std::vector<std::vector<Int>> a;
    std::vector<Int> b;
    for (int s = 0; s <= params.t; ++s) {
        for_each_block(params.v, s, [&](Block y) {
            std::vector<Int> row(cols.size(), 0);
            for (size_t j = 0; j < cols.size(); ++j)
                if (y.subset_of(cols[j]))
                    row[j] = 1;
            a.push_back(std::move(row));
            b.push_back(params.lambdas[s]);
        });
    }
    auto x = solve_integer(a, b);
    if (!x)
        throw std::runtime_error("solve_design_oracle: no integral solution");
    std::map<Block, Int> entries;
    for (size_t j = 0; j < cols.size(); ++j)
        if ((*x)[j] != 0)
            entries.emplace(cols[j], (*x)[j]);
    return BlockVector(ground, std::move(entries));
}

}  // namespace specht
