#include "wavegraph/exact_matrix.hpp"

#include <algorithm>
#include <string>

namespace wavegraph {

ExactMatrix::ExactMatrix(int n) : n_(n) {
    if (n < 1) throw InvalidInput("matrix size must be positive");
    entries_.assign(static_cast<std::size_t>(n) * n, mpq_class(0));
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix a(n);
    for (int i = 1; i <= n; ++i) a.at(i, i) = 1;
    return a;
}

ExactMatrix ExactMatrix::transvection(int n, int i, int j, const mpq_class& c) {
    if (i == j) throw InvalidInput("transvection needs i != j");
    ExactMatrix a = identity(n);
    a.at(i, j) = c;
    return a;
}

ExactMatrix ExactMatrix::make_sl(int n, const std::vector<mpq_class>& entries) {
    if (static_cast<int>(entries.size()) != n * n)
        throw InvalidInput("expected " + std::to_string(n * n) + " entries");
    ExactMatrix a(n);
    a.entries_ = entries;
    if (a.determinant() != 1)
        throw InvalidInput("matrix is not in SL(n): determinant differs from 1");
    return a;
}

const mpq_class& ExactMatrix::at(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw InvalidInput("matrix index out of range");
    return entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

mpq_class& ExactMatrix::at(int i, int j) {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw InvalidInput("matrix index out of range");
    return entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

mpq_class ExactMatrix::determinant() const {
    std::vector<std::vector<mpq_class>> rows(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
        rows[i].assign(entries_.begin() + static_cast<std::size_t>(i) * n_,
                       entries_.begin() + static_cast<std::size_t>(i + 1) * n_);
    mpq_class det = 1;
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int r = col; r < n_; ++r)
            if (sgn(rows[r][col]) != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(rows[pivot], rows[col]);
            det = -det;
        }
        det *= rows[col][col];
        const mpq_class inv = 1 / rows[col][col];
        for (int r = col + 1; r < n_; ++r) {
            if (sgn(rows[r][col]) == 0) continue;
            const mpq_class factor = rows[r][col] * inv;
            for (int c = col; c < n_; ++c) rows[r][c] -= factor * rows[col][c];
        }
    }
    return det;
}

int rank_exact(std::vector<std::vector<mpq_class>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    int rank = 0;
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (sgn(rows[r][col]) != 0) { pivot = static_cast<int>(r); break; }
        if (pivot < 0) continue;
        std::swap(rows[pivot], rows[rank]);
        const mpq_class inv = 1 / rows[rank][col];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (sgn(rows[r][col]) == 0) continue;
            const mpq_class factor = rows[r][col] * inv;
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

bool SparseEchelon::add_row(SparseRow row) {
    if (saturated()) return false;
    // reduce against stored rows in pivot order
    for (std::size_t s = 0; s < rows_.size() && !row.empty(); ++s) {
        const int pivot = pivot_of_row_[s];
        auto it = std::lower_bound(row.begin(), row.end(), pivot,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it == row.end() || it->first != pivot) continue;
        const mpq_class factor = it->second;  // stored rows have unit pivots
        SparseRow reduced;
        reduced.reserve(row.size() + rows_[s].size());
        auto a = row.begin();
        auto b = rows_[s].begin();
        while (a != row.end() || b != rows_[s].end()) {
            if (b == rows_[s].end() || (a != row.end() && a->first < b->first)) {
                reduced.push_back(*a++);
            } else if (a == row.end() || b->first < a->first) {
                reduced.emplace_back(b->first, -factor * b->second);
                ++b;
            } else {
                mpq_class v = a->second - factor * b->second;
                if (sgn(v) != 0) reduced.emplace_back(a->first, std::move(v));
                ++a, ++b;
            }
        }
        row = std::move(reduced);
    }
    if (row.empty()) return false;

    const mpq_class inv = 1 / row.front().second;
    for (auto& [col, v] : row) v *= inv;
    pivot_of_row_.push_back(row.front().first);
    rows_.push_back(std::move(row));

    // keep rows ordered by pivot column so reduction stays one pass
    for (std::size_t s = rows_.size(); s-- > 1;) {
        if (pivot_of_row_[s - 1] <= pivot_of_row_[s]) break;
        std::swap(pivot_of_row_[s - 1], pivot_of_row_[s]);
        std::swap(rows_[s - 1], rows_[s]);
    }
    return true;
}

}  // namespace wavegraph
