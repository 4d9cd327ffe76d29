#include "specht/hemmer.hpp"

#include "specht/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace specht {

namespace {

void require_positive_partition(const Composition& shape) {
    if (!shape.is_partition())
        throw std::invalid_argument("expected a partition");
    for (int64_t p : shape.parts())
        if (p <= 0)
            throw std::invalid_argument("expected a partition with positive parts");
}

// (i, v) pairs of the Kernel Intersection Theorem: 1 <= i <= r-1,
// 0 <= v <= lambda_{i+1} - 1.
std::vector<std::pair<int, int64_t>> kit_pairs(const Composition& shape) {
    std::vector<std::pair<int, int64_t>> out;
    const auto& parts = shape.parts();
    for (int i = 1; i + 1 <= shape.rows(); ++i)
        for (int64_t v = 0; v < parts[i]; ++v)
            out.emplace_back(i, v);
    return out;
}

}  // namespace

bool in_specht(const TabloidVector& u) {
    require_positive_partition(u.shape());
    for (const auto& [i, v] : kit_pairs(u.shape()))
        if (!psi(u, i, v).is_zero())
            return false;
    return true;
}

bool in_specht(const TabloidVector& u, const PrimeP& p) {
    require_positive_partition(u.shape());
    for (const auto& [i, v] : kit_pairs(u.shape()))
        if (!reduce_mod(psi(u, i, v), p).is_zero())
            return false;
    return true;
}

bool h0_nonzero(const Composition& partition, const PrimeP& p) {
    if (!partition.is_partition())
        throw std::invalid_argument("h0_nonzero: not a partition");
    const auto& parts = partition.parts();
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
        if (parts[i + 1] == 0)
            continue;
        const Int modulus = pow_int(p.value(), lp(parts[i + 1], p));
        if ((Int(parts[i]) + 1) % modulus != 0)
            return false;
    }
    return true;
}

std::optional<int64_t> scalar_of_f_multiple(const TabloidVector& image_mod_p) {
    if (image_mod_p.is_zero())
        return 0;
    const Int& first = image_mod_p.entries().begin()->second;
    for (const auto& [t, c] : image_mod_p.entries())
        if (c != first)
            return std::nullopt;
    // A nonzero scalar requires every tabloid of the shape to be present.
    if (Int(static_cast<int64_t>(image_mod_p.entries().size())) !=
        tabloid_count(image_mod_p.shape()))
        return std::nullopt;
    return first.convert_to<int64_t>();
}

Int f_image_scalar(const Composition& shape, int i, int64_t v) {
    const auto& parts = shape.parts();
    if (i < 1 || i >= shape.rows())
        throw std::invalid_argument("f_image_scalar: row index out of range");
    return binom(parts[i - 1] + parts[i] - v, parts[i] - v);
}

HemmerReport hemmer_check(const TabloidVector& u, const PrimeP& p) {
    require_positive_partition(u.shape());
    HemmerReport report;
    std::vector<int64_t> mus;
    bool all_multiples = true;
    bool some_nonzero = false;
    for (const auto& [i, v] : kit_pairs(u.shape())) {
        const TabloidVector image = reduce_mod(psi(u, i, v), p);
        const auto scalar = scalar_of_f_multiple(image);
        HemmerReport::Entry e;
        e.i = i;
        e.v = v;
        e.is_multiple_of_f = scalar.has_value();
        e.scalar = scalar.value_or(0);
        report.entries.push_back(e);
        mus.push_back((f_image_scalar(u.shape(), i, v) % p.value()).convert_to<int64_t>());
        if (!scalar)
            all_multiples = false;
        else if (*scalar != 0)
            some_nonzero = true;
    }
    report.condition_i = all_multiples && some_nonzero;

    // Condition (ii) fails iff some a in {1..p-1} matches a*mu = lambda
    // simultaneously at every (i, v).
    bool some_a_matches = false;
    for (int64_t a = 1; a < p.value() && !some_a_matches; ++a) {
        bool ok = true;
        for (size_t k = 0; k < report.entries.size(); ++k) {
            const auto& e = report.entries[k];
            if (!e.is_multiple_of_f || (a * mus[k]) % p.value() != e.scalar) {
                ok = false;
                break;
            }
        }
        some_a_matches = ok;
    }
    report.condition_ii = !some_a_matches;
    report.verdict = report.condition_i && report.condition_ii;
    return report;
}

int64_t stacked_psi_nullity(const Composition& partition) {
    require_positive_partition(partition);
    const Int count = tabloid_count(partition);
    if (count > tabloid_guard())
        throw std::length_error("stacked_psi_nullity: tabloid count exceeds guard");
    const int64_t n_cols = count.convert_to<int64_t>();

    std::map<Tabloid, int64_t> index;
    {
        int64_t next = 0;
        for_each_tabloid(partition, [&](const Tabloid& t) { index.emplace(t, next++); });
    }

    SparseEchelon echelon;
    for (const auto& [i, v] : kit_pairs(partition)) {
        std::map<Tabloid, SparseRow> rows;
        for (const auto& entry : index) {
            const int64_t col = entry.second;
            psi_images(partition, entry.first, i, v, [&](const Tabloid& image) {
                rows[image].emplace_back(col, 1);
            });
        }
        for (auto& [target, row] : rows) {
            std::sort(row.begin(), row.end());
            echelon.insert(std::move(row));
        }
    }
    return n_cols - echelon.rank();
}

}  // namespace specht
