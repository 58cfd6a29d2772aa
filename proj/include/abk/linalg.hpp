#pragma once

#include <algorithm>
#include <vector>

#include "abk/rational.hpp"

namespace abk {

// Incremental exact reduced row-echelon form over the rationals.  Rows are
// fed one at a time; dependent rows are discarded, so memory is bounded by
// the rank.  Deterministic pivoting: first nonzero column of the reduced row.
class Echelon {
 public:
  explicit Echelon(int cols) : cols_(cols) {}

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& pivots() const { return pivots_; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  // Reduces the row against the current basis; keeps it (renormalized, with
  // back-substitution into earlier rows) if it is independent.  Returns
  // whether the rank increased.
  bool add_row(std::vector<Rational> row) {
    reduce(row);
    int p = first_nonzero(row);
    if (p < 0) return false;
    Rational lead = row[p];
    for (Rational& v : row) v /= lead;
    for (std::vector<Rational>& r : rows_)
      if (r[p] != 0) {
        Rational f = r[p];
        for (int j = 0; j < cols_; ++j) r[j] -= f * row[j];
      }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    size_t idx = static_cast<size_t>(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + static_cast<long>(idx), std::move(row));
    return true;
  }

  // Reduces a copy of the row against the basis; true iff it reduces to zero
  // (i.e. the row lies in the current row span).
  bool in_span(std::vector<Rational> row) const {
    reduce(row);
    return first_nonzero(row) < 0;
  }

  // Basis of the solution space of (rows) x = 0, one vector per free column.
  std::vector<std::vector<Rational>> nullspace() const {
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (int p : pivots_) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols_; ++f) {
      if (is_pivot[static_cast<size_t>(f)]) continue;
      std::vector<Rational> v(static_cast<size_t>(cols_), Rational(0));
      v[static_cast<size_t>(f)] = 1;
      for (size_t i = 0; i < rows_.size(); ++i)
        v[static_cast<size_t>(pivots_[i])] = -rows_[i][static_cast<size_t>(f)];
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  void reduce(std::vector<Rational>& row) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
      Rational f = row[static_cast<size_t>(pivots_[i])];
      if (f == 0) continue;
      for (int j = 0; j < cols_; ++j) row[static_cast<size_t>(j)] -= f * rows_[i][static_cast<size_t>(j)];
    }
  }

  int first_nonzero(const std::vector<Rational>& row) const {
    for (int j = 0; j < cols_; ++j)
      if (row[static_cast<size_t>(j)] != 0) return j;
    return -1;
  }

  int cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

}  // namespace abk
