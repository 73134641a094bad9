#pragma once

// Exact linear algebra over Q: incremental row echelon form, rank,
// determinants.

#include <utility>
#include <vector>

#include "hilbdiag/common.hpp"

namespace hilbdiag {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

/// Rows are inserted one at a time and reduced against the current pivots;
/// the pivot rows are kept normalized (pivot entry 1).
class RowEchelon {
 public:
  explicit RowEchelon(size_t ncols) : ncols_(ncols) {}

  size_t ncols() const { return ncols_; }
  size_t rank() const { return pivots_.size(); }

  /// Reduces `row` against the pivots. Returns true if it was independent
  /// (and is now a new pivot row).
  bool insert(RatVector row) {
    if (row.size() != ncols_) throw Error("RowEchelon: row length mismatch");
    reduce(row);
    for (size_t c = 0; c < ncols_; ++c) {
      if (row[c] == 0) continue;
      Rational inv = 1 / row[c];
      for (size_t k = c; k < ncols_; ++k)
        if (row[k] != 0) row[k] *= inv;
      pivots_.emplace_back(c, std::move(row));
      return true;
    }
    return false;
  }

  /// True if `row` lies in the span of the inserted rows.
  bool in_span(RatVector row) const {
    reduce(row);
    for (const auto& v : row)
      if (v != 0) return false;
    return true;
  }

 private:
  void reduce(RatVector& row) const {
    for (const auto& [c, prow] : pivots_) {
      if (row[c] == 0) continue;
      Rational f = row[c];
      for (size_t k = c; k < ncols_; ++k)
        if (prow[k] != 0) row[k] -= f * prow[k];
    }
  }

  size_t ncols_;
  std::vector<std::pair<size_t, RatVector>> pivots_;
};

inline size_t rank(const RatMatrix& m) {
  if (m.empty()) return 0;
  RowEchelon e(m.front().size());
  for (const auto& row : m) e.insert(row);
  return e.rank();
}

inline Rational determinant(RatMatrix m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error("determinant of a non-square matrix");
  Rational det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

inline RatMatrix identity_matrix(size_t n) {
  RatMatrix m(n, RatVector(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b.front().size();
  RatMatrix out(r, RatVector(c, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < c; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

}  // namespace hilbdiag
