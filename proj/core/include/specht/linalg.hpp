#pragma once

#include "specht/arith.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace specht {

using Rat = boost::multiprecision::cpp_rational;
using IntMat = std::vector<std::vector<Int>>;

/// Sparse integer row: (column, coefficient) pairs sorted by column,
/// coefficients nonzero.
using SparseRow = std::vector<std::pair<int64_t, Int>>;

/// Exact rank by fraction-free Bareiss elimination.  Consumes the matrix.
int64_t exact_rank(IntMat m);

/// Incremental row echelon over the integers.  Each inserted row is reduced
/// against the pivot rows by cross-multiplication and divided by its content,
/// so the echelon is exact over Q while staying integral.
class SparseEchelon {
public:
    /// Reduces the row; keeps it as a new pivot row if nonzero.
    /// Returns true when the rank grew.
    bool insert(SparseRow row);

    /// Reduction only; the echelon is unchanged.  Empty result means the row
    /// lies in the row span.
    SparseRow reduce(SparseRow row) const;

    int64_t rank() const { return static_cast<int64_t>(rows_.size()); }

    const std::vector<SparseRow>& rows() const { return rows_; }

    /// Integer basis of the nullspace of the inserted rows, viewed as a
    /// matrix with `cols` columns.  One basis vector per free column, in
    /// increasing free-column order; each vector has content 1 and positive
    /// leading entry.
    std::vector<std::vector<Int>> nullspace(int64_t cols) const;

private:
    // pivot column -> index into rows_
    std::vector<SparseRow> rows_;
    std::vector<int64_t> pivot_cols_;
};

/// Any rational solution of A x = b, or nullopt when inconsistent.
/// Free variables are set to zero.
std::optional<std::vector<Rat>> solve_rational(const IntMat& a, const std::vector<Int>& b);

/// Any integer solution of A x = b, or nullopt when none exists.  Works on
/// the column lattice of A via a Hermite-style triangularization.
std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& b);

/// gcd of the absolute values of the entries (0 for the zero vector).
Int content(const SparseRow& row);

}  // namespace specht
