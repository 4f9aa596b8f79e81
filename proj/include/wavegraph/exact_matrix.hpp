#ifndef WAVEGRAPH_EXACT_MATRIX_HPP
#define WAVEGRAPH_EXACT_MATRIX_HPP

#include <vector>

#include <gmpxx.h>

#include "wavegraph/errors.hpp"

namespace wavegraph {

/// Dense n x n matrix of exact rationals. Group elements are built
/// through make_sl, which checks det = 1 on construction.
class ExactMatrix {
  public:
    explicit ExactMatrix(int n);

    static ExactMatrix identity(int n);
    /// I + c*E_ij (1-based i != j); determinant 1 for every c.
    static ExactMatrix transvection(int n, int i, int j, const mpq_class& c);
    /// Arbitrary entries (row-major), rejected unless det = 1 exactly.
    static ExactMatrix make_sl(int n, const std::vector<mpq_class>& entries);

    int n() const { return n_; }
    const mpq_class& at(int i, int j) const;  // 1-based
    mpq_class& at(int i, int j);

    mpq_class determinant() const;

  private:
    int n_;
    std::vector<mpq_class> entries_;
};

/// Rank of a dense rational matrix (destructive Gaussian elimination).
int rank_exact(std::vector<std::vector<mpq_class>> rows);

/// Sparse row: sorted (column, value) pairs, values nonzero.
using SparseRow = std::vector<std::pair<int, mpq_class>>;

/// Incremental exact row-echelon accumulator over sparse rational rows.
/// Feed rows one at a time; rank() is the number of independent rows so
/// far. Stops absorbing work once rank reaches `max_rank` (the column
/// count), which callers use to bail out early.
class SparseEchelon {
  public:
    explicit SparseEchelon(int columns) : columns_(columns) {}

    /// Reduces `row` against the basis; keeps it if independent.
    /// Returns true when the row added a new pivot.
    bool add_row(SparseRow row);

    int rank() const { return static_cast<int>(pivot_of_row_.size()); }
    bool saturated() const { return rank() >= columns_; }

  private:
    int columns_;
    std::vector<SparseRow> rows_;        // echelon rows, unit pivot entries
    std::vector<int> pivot_of_row_;      // pivot column per stored row
};

}  // namespace wavegraph

#endif
