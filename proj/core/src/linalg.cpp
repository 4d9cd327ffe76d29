#include "specht/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace specht {

int64_t exact_rank(IntMat m) {
    if (m.empty() || m[0].empty())
        return 0;
    const size_t nrows = m.size(), ncols = m[0].size();
    Int prev_pivot = 1;
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < nrows; ++col) {
        size_t piv = row;
        while (piv < nrows && m[piv][col] == 0)
            ++piv;
        if (piv == nrows)
            continue;
        std::swap(m[row], m[piv]);
        for (size_t i = row + 1; i < nrows; ++i) {
            for (size_t j = col + 1; j < ncols; ++j) {
                m[i][j] = m[row][col] * m[i][j] - m[i][col] * m[row][j];
                m[i][j] /= prev_pivot;  // exact (Bareiss)
            }
            m[i][col] = 0;
        }
        prev_pivot = m[row][col];
        ++row;
    }
    return static_cast<int64_t>(row);
}

Int content(const SparseRow& row) {
    Int g = 0;
    for (const auto& [c, x] : row) {
        g = gcd(g, abs(x));
        if (g == 1)
            break;
    }
    return g;
}

namespace {

void normalize(SparseRow& row) {
    const Int g = content(row);
    if (g > 1)
        for (auto& [c, x] : row)
            x /= g;
    if (!row.empty() && row.front().second < 0)
        for (auto& [c, x] : row)
            x = -x;
}

// row := p_lead * row - r_lead * pivot, then divide by content.
SparseRow eliminate(const SparseRow& row, const SparseRow& pivot) {
    const Int p_lead = pivot.front().second;
    const Int r_lead = row.front().second;
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.emplace_back(row[i].first, p_lead * row[i].second);
            ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -r_lead * pivot[j].second);
            ++j;
        } else {
            Int x = p_lead * row[i].second - r_lead * pivot[j].second;
            if (x != 0)
                out.emplace_back(row[i].first, std::move(x));
            ++i;
            ++j;
        }
    }
    normalize(out);
    return out;
}

}  // namespace

SparseRow SparseEchelon::reduce(SparseRow row) const {
    normalize(row);
    while (!row.empty()) {
        const int64_t lead = row.front().first;
        auto it = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), lead);
        if (it == pivot_cols_.end() || *it != lead)
            break;
        row = eliminate(row, rows_[static_cast<size_t>(it - pivot_cols_.begin())]);
    }
    return row;
}

bool SparseEchelon::insert(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty())
        return false;
    const int64_t lead = row.front().first;
    auto it = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), lead);
    const size_t pos = static_cast<size_t>(it - pivot_cols_.begin());
    pivot_cols_.insert(it, lead);
    rows_.insert(rows_.begin() + pos, std::move(row));
    return true;
}

std::vector<std::vector<Int>> SparseEchelon::nullspace(int64_t cols) const {
    std::vector<bool> is_pivot(cols, false);
    for (int64_t c : pivot_cols_) {
        if (c < 0 || c >= cols)
            throw std::invalid_argument("nullspace: pivot column outside matrix");
        is_pivot[c] = true;
    }
    std::vector<std::vector<Int>> basis;
    for (int64_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        // x_f = 1, other free vars 0; solve pivot vars bottom-up over Q.
        std::vector<Rat> x(cols, Rat(0));
        x[f] = 1;
        for (size_t k = rows_.size(); k-- > 0;) {
            const SparseRow& r = rows_[k];
            Rat acc = 0;
            for (size_t j = 1; j < r.size(); ++j)
                acc += Rat(r[j].second) * x[r[j].first];
            x[pivot_cols_[k]] = -acc / Rat(r.front().second);
        }
        Int lcm_den = 1;
        for (const Rat& q : x)
            lcm_den = lcm(lcm_den, denominator(q));
        std::vector<Int> vec(cols);
        Int g = 0;
        for (int64_t j = 0; j < cols; ++j) {
            vec[j] = numerator(x[j]) * (lcm_den / denominator(x[j]));
            g = gcd(g, abs(vec[j]));
        }
        if (g > 1)
            for (Int& e : vec)
                e /= g;
        for (int64_t j = 0; j < cols; ++j) {
            if (vec[j] == 0)
                continue;
            if (vec[j] < 0)
                for (Int& e : vec)
                    e = -e;
            break;
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve_rational(const IntMat& a, const std::vector<Int>& b) {
    const size_t m = a.size();
    if (b.size() != m)
        throw std::invalid_argument("solve_rational: dimension mismatch");
    const size_t n = m == 0 ? 0 : a[0].size();
    std::vector<std::vector<Rat>> w(m, std::vector<Rat>(n + 1));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j)
            w[i][j] = Rat(a[i][j]);
        w[i][n] = Rat(b[i]);
    }
    std::vector<int64_t> pivot_col_of_row;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t piv = row;
        while (piv < m && w[piv][col] == 0)
            ++piv;
        if (piv == m)
            continue;
        std::swap(w[row], w[piv]);
        const Rat d = w[row][col];
        for (size_t j = col; j <= n; ++j)
            w[row][j] /= d;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || w[i][col] == 0)
                continue;
            const Rat f = w[i][col];
            for (size_t j = col; j <= n; ++j)
                w[i][j] -= f * w[row][j];
        }
        pivot_col_of_row.push_back(static_cast<int64_t>(col));
        ++row;
    }
    for (size_t i = row; i < m; ++i)
        if (w[i][n] != 0)
            return std::nullopt;
    std::vector<Rat> x(n, Rat(0));
    for (size_t k = 0; k < pivot_col_of_row.size(); ++k)
        x[pivot_col_of_row[k]] = w[k][n];
    return x;
}

std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& b) {
    const size_t m = a.size();
    if (b.size() != m)
        throw std::invalid_argument("solve_integer: dimension mismatch");
    const size_t n = m == 0 ? 0 : a[0].size();

    // Generators of the column lattice, carrying their coordinate vectors:
    // g = A c holds for every (g, c) throughout.
    struct Gen {
        std::vector<Int> g;
        std::map<size_t, Int> c;
    };
    std::vector<Gen> active(n);
    for (size_t j = 0; j < n; ++j) {
        active[j].g.resize(m);
        for (size_t i = 0; i < m; ++i)
            active[j].g[i] = a[i][j];
        active[j].c[j] = 1;
    }
    auto sub_mult = [m](Gen& x, const Gen& y, const Int& q) {
        if (q == 0)
            return;
        for (size_t i = 0; i < m; ++i)
            x.g[i] -= q * y.g[i];
        for (const auto& [j, cj] : y.c) {
            Int& slot = x.c[j];
            slot -= q * cj;
            if (slot == 0)
                x.c.erase(j);
        }
    };

    std::vector<Gen> pivots;
    std::vector<size_t> pivot_rows;
    for (size_t row = 0; row < m && !active.empty(); ++row) {
        // gcd-eliminate this coordinate among the active generators
        while (true) {
            size_t best = active.size();
            for (size_t k = 0; k < active.size(); ++k)
                if (active[k].g[row] != 0 &&
                    (best == active.size() || abs(active[k].g[row]) < abs(active[best].g[row])))
                    best = k;
            if (best == active.size())
                break;  // column already clear
            bool others = false;
            for (size_t k = 0; k < active.size(); ++k) {
                if (k == best || active[k].g[row] == 0)
                    continue;
                const Int q = active[k].g[row] / active[best].g[row];
                sub_mult(active[k], active[best], q);
                if (active[k].g[row] != 0)
                    others = true;
            }
            if (!others) {
                pivots.push_back(std::move(active[best]));
                pivot_rows.push_back(row);
                active.erase(active.begin() + static_cast<int64_t>(best));
                break;
            }
        }
    }

    // Forward substitution against the triangular lattice basis.
    std::vector<Int> r = b;
    std::vector<Int> x(n, 0);
    for (size_t k = 0; k < pivots.size(); ++k) {
        const size_t row = pivot_rows[k];
        if (r[row] == 0)
            continue;
        const Int& p = pivots[k].g[row];
        if (r[row] % p != 0)
            return std::nullopt;
        const Int q = r[row] / p;
        for (size_t i = 0; i < m; ++i)
            r[i] -= q * pivots[k].g[i];
        for (const auto& [j, cj] : pivots[k].c)
            x[j] += q * cj;
    }
    for (size_t i = 0; i < m; ++i)
        if (r[i] != 0)
            return std::nullopt;
    return x;
}

}  // namespace specht
