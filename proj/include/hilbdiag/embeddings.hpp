#pragma once

// Coordinates on the group completions: the syzygy matrices of three
// bilinear forms on the 3x2 grid and their Pluecker parametrization, the
// scaled-minor coordinates of a matrix tuple, and the rank test and cubic
// for three (1,1)-forms on the 2x3 grid.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hilbdiag/deligne.hpp"
#include "hilbdiag/linalg.hpp"
#include "hilbdiag/poly.hpp"

namespace hilbdiag {

/// 3x9 coefficient matrix; column 3 (i1 - 1) + (i2 - 1) holds the
/// coefficient of x_{i1,1} x_{i2,2}, rows are the forms a, b, c.
using CoeffMatrix39 = RatMatrix;

inline size_t pair_column(int i1, int i2) { return static_cast<size_t>(3 * (i1 - 1) + (i2 - 1)); }

/// The three generators A * (x11 x12, x11 x22, ..., x31 x32)^T on the 3x2 grid.
inline std::vector<RatPoly> bilinear_generators(const CoeffMatrix39& A) {
  Shape s{3, 2};
  std::vector<RatPoly> out;
  for (const auto& row : A) {
    RatPoly g(s);
    for (int i1 = 1; i1 <= 3; ++i1)
      for (int i2 = 1; i2 <= 3; ++i2)
        g = g + RatPoly::grid_var(s, 0, i1, 1) * RatPoly::grid_var(s, 0, i2, 2) * row[pair_column(i1, i2)];
    out.push_back(std::move(g));
  }
  return out;
}

struct CollineationMatrices {
  RatMatrix first;   // generators times x11, x21, x31; bidegree (2,1)
  RatMatrix second;  // generators times x12, x22, x32; bidegree (1,2)
  size_t rank_first = 0;
  size_t rank_second = 0;
};

namespace embeddings_detail {

// The printed layout: in row block s (multiplier from row s), entry 3k + l of
// the pattern places the coefficient with index 10 * first + second at that
// column; 0 marks a zero. One pattern per block.
inline const std::array<std::array<int, 18>, 3>& first_pattern() {
  static const std::array<std::array<int, 18>, 3> p{{
      {11, 12, 13, 21, 22, 23, 31, 32, 33, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 11, 12, 13, 0, 0, 0, 21, 22, 23, 31, 32, 33, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 11, 12, 13, 0, 0, 0, 21, 22, 23, 31, 32, 33},
  }};
  return p;
}

inline const std::array<std::array<int, 18>, 3>& second_pattern() {
  static const std::array<std::array<int, 18>, 3> p{{
      {11, 21, 31, 12, 22, 32, 13, 23, 33, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 11, 21, 31, 0, 0, 0, 12, 22, 32, 13, 23, 33, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 11, 21, 31, 0, 0, 0, 12, 22, 32, 13, 23, 33},
  }};
  return p;
}

inline RatMatrix from_pattern(const CoeffMatrix39& A, const std::array<std::array<int, 18>, 3>& pattern) {
  RatMatrix m;
  for (const auto& block : pattern)
    for (const auto& form : A) {
      RatVector row(18, 0);
      for (size_t c = 0; c < 18; ++c)
        if (block[c]) row[c] = form[pair_column(block[c] / 10, block[c] % 10)];
      m.push_back(std::move(row));
    }
  return m;
}

// Index of the unordered pair p <= q among 11, 12, 13, 22, 23, 33.
inline size_t sym_pair(int p, int q) {
  if (p > q) std::swap(p, q);
  static const int idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  return static_cast<size_t>(idx[p - 1][q - 1]);
}

}  // namespace embeddings_detail

inline void check_coeff_matrix(const CoeffMatrix39& A) {
  if (A.size() != 3) throw Error("coefficient matrix must have 3 rows");
  for (const auto& r : A)
    if (r.size() != 9) throw Error("coefficient matrix must have 9 columns");
}

/// The two 9x18 matrices in the printed layout and their ranks.
inline CollineationMatrices collineation_matrices(const CoeffMatrix39& A) {
  check_coeff_matrix(A);
  CollineationMatrices out;
  out.first = embeddings_detail::from_pattern(A, embeddings_detail::first_pattern());
  out.second = embeddings_detail::from_pattern(A, embeddings_detail::second_pattern());
  out.rank_first = rank(out.first);
  out.rank_second = rank(out.second);
  return out;
}

/// The same matrices computed by multiplying the generators: in the first,
/// column 3 pair(p,q) + (r - 1) is the coefficient of x_{p1} x_{q1} x_{r2};
/// in the second, column 3 pair(p,q) + (r - 1) that of x_{r1} x_{p2} x_{q2}.
inline CollineationMatrices collineation_matrices_generated(const CoeffMatrix39& A) {
  check_coeff_matrix(A);
  Shape s{3, 2};
  auto gens = bilinear_generators(A);
  CollineationMatrices out;
  for (int side = 1; side <= 2; ++side) {
    RatMatrix& m = side == 1 ? out.first : out.second;
    for (int sr = 1; sr <= 3; ++sr)
      for (const auto& g : gens) {
        auto prod = g * RatPoly::grid_var(s, 0, sr, side);
        RatVector row(18, 0);
        for (const auto& [e, c] : prod.terms()) {
          std::vector<int> c1, c2;
          for (int r = 1; r <= 3; ++r) {
            for (int k = 0; k < e[static_cast<size_t>(s.index(r, 1))]; ++k) c1.push_back(r);
            for (int k = 0; k < e[static_cast<size_t>(s.index(r, 2))]; ++k) c2.push_back(r);
          }
          size_t col = side == 1 ? 3 * embeddings_detail::sym_pair(c1[0], c1[1]) + static_cast<size_t>(c2[0] - 1)
                                 : 3 * embeddings_detail::sym_pair(c2[0], c2[1]) + static_cast<size_t>(c1[0] - 1);
          row[col] += c;
        }
        m.push_back(std::move(row));
      }
  }
  out.rank_first = rank(out.first);
  out.rank_second = rank(out.second);
  return out;
}

/// Coefficients of the translate of the 2x2 minors by (U, V): for i < j the
/// form (U_i . x_col1)(V_j . x_col2) - (U_j . x_col1)(V_i . x_col2), with U_i
/// the i-th row. Rows are the pairs 12, 13, 23.
inline CoeffMatrix39 coefficients_from_uv(const RatMatrix& U, const RatMatrix& V) {
  CoeffMatrix39 A(3, RatVector(9, 0));
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (size_t r = 0; r < 3; ++r) {
    auto [i, j] = pairs[r];
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= 3; ++l)
        A[r][pair_column(k, l)] = U[static_cast<size_t>(i)][static_cast<size_t>(k - 1)] * V[static_cast<size_t>(j)][static_cast<size_t>(l - 1)] -
                                  U[static_cast<size_t>(j)][static_cast<size_t>(k - 1)] * V[static_cast<size_t>(i)][static_cast<size_t>(l - 1)];
  }
  return A;
}

/// A Pluecker index is a triple of column pairs (i1 i2, j1 j2, k1 k2).
using PluckerIndex = std::array<int, 6>;

enum class PluckerKind { zero, monomial, binomial };

struct PluckerValue {
  PluckerIndex index{};
  Rational value;
  Rational first;   // det[u_i1, v_i2, u_j1] det[v_j2, u_k1, v_k2]
  Rational second;  // det[u_i1, v_i2, v_j2] det[u_j1, u_k1, v_k2]
  PluckerKind kind() const {
    if (first == 0 && second == 0) return PluckerKind::zero;
    if (first == 0 || second == 0) return PluckerKind::monomial;
    return PluckerKind::binomial;
  }
};

inline Rational det3(const RatVector& a, const RatVector& b, const RatVector& c) {
  return determinant({{a[0], b[0], c[0]}, {a[1], b[1], c[1]}, {a[2], b[2], c[2]}});
}

inline RatVector column(const RatMatrix& m, int c) {
  return {m[0][static_cast<size_t>(c - 1)], m[1][static_cast<size_t>(c - 1)], m[2][static_cast<size_t>(c - 1)]};
}

inline PluckerValue plucker_value(const RatMatrix& U, const RatMatrix& V, const PluckerIndex& ix) {
  auto u = [&](int k) { return column(U, ix[static_cast<size_t>(k)]); };
  auto v = [&](int k) { return column(V, ix[static_cast<size_t>(k)]); };
  PluckerValue p;
  p.index = ix;
  p.first = det3(u(0), v(1), u(2)) * det3(v(3), u(4), v(5));
  p.second = det3(u(0), v(1), v(3)) * det3(u(2), u(4), v(5));
  p.value = p.first - p.second;
  return p;
}

/// Kind of the index pattern as a polynomial in U, V: a factor det[.,.,.]
/// vanishes identically exactly when it repeats a column symbol.
inline PluckerKind plucker_pattern_kind(const PluckerIndex& ix) {
  // symbols: u_k -> k, v_k -> 3 + k
  auto u = [&](size_t k) { return ix[k]; };
  auto v = [&](size_t k) { return 3 + ix[k]; };
  auto vanishes = [](int a, int b, int c) { return a == b || a == c || b == c; };
  bool first = vanishes(u(0), v(1), u(2)) || vanishes(v(3), u(4), v(5));
  bool second = vanishes(u(0), v(1), v(3)) || vanishes(u(2), u(4), v(5));
  if (first && second) return PluckerKind::zero;
  if (first || second) return PluckerKind::monomial;
  return PluckerKind::binomial;
}

/// Invertible matrix with entries drawn from [-10^6, 10^6]; small entries
/// make accidental vanishing of the determinant products too likely.
inline RatMatrix random_generic_invertible(int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> wide(-1000000, 1000000);
  for (;;) {
    RatMatrix m(static_cast<size_t>(d), RatVector(static_cast<size_t>(d)));
    for (auto& row : m)
      for (auto& e : row) e = wide(rng);
    if (determinant(m) != 0) return m;
  }
}

/// The 84 triples of distinct column pairs in increasing column order.
inline std::vector<PluckerIndex> plucker_indices() {
  std::vector<PluckerIndex> out;
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b)
      for (int c = b + 1; c < 9; ++c) out.push_back({a / 3 + 1, a % 3 + 1, b / 3 + 1, b % 3 + 1, c / 3 + 1, c % 3 + 1});
  return out;
}

inline void check_invertible3(const RatMatrix& m, const char* name) {
  if (m.size() != 3 || m[0].size() != 3 || m[1].size() != 3 || m[2].size() != 3)
    throw Error(std::string(name) + " must be 3x3");
  if (determinant(m) == 0) throw Error(std::string(name) + " is singular");
}

inline std::vector<PluckerValue> plucker_param(const RatMatrix& U, const RatMatrix& V) {
  check_invertible3(U, "U");
  check_invertible3(V, "V");
  std::vector<PluckerValue> out;
  for (const auto& ix : plucker_indices()) out.push_back(plucker_value(U, V, ix));
  return out;
}

/// The maximal minor of A on the three columns of the index.
inline Rational plucker_minor(const CoeffMatrix39& A, const PluckerIndex& ix) {
  RatMatrix m(3, RatVector(3));
  for (size_t r = 0; r < 3; ++r)
    for (size_t k = 0; k < 3; ++k) m[r][k] = A[r][pair_column(ix[2 * k], ix[2 * k + 1])];
  return determinant(m);
}

struct PluckerCounts {
  int zero = 0, binomial = 0, monomial = 0;
  bool operator==(const PluckerCounts&) const = default;
};

inline PluckerCounts classify(const std::vector<PluckerValue>& values) {
  PluckerCounts c;
  for (const auto& p : values) switch (p.kind()) {
      case PluckerKind::zero: ++c.zero; break;
      case PluckerKind::monomial: ++c.monomial; break;
      case PluckerKind::binomial: ++c.binomial; break;
    }
  return c;
}

inline std::string plucker_name(const PluckerIndex& ix) {
  std::string s = "p_";
  for (size_t k = 0; k < 6; ++k) s += (k && k % 2 == 0 ? "," : "") + std::to_string(ix[k]);
  return s;
}

/// Coordinates of one type i: the d x d minors of (A_1 | ... | A_n) that
/// use i_j columns of block j, in lexicographic order of column choices,
/// scaled so the first nonzero entry is 1.
struct LafforgueType {
  std::vector<int> type;
  std::vector<Rational> coords;
};

inline std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(parts), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == parts - 1) {
      cur[static_cast<size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[static_cast<size_t>(pos)] = k;
      self(self, pos + 1, left - k);
    }
  };
  if (parts > 0) rec(rec, 0, total);
  return out;
}

inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (popcount(m) == k) out.push_back(bits_of(m));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<LafforgueType> lafforgue_coordinates(const std::vector<RatMatrix>& A, bool normalize = true) {
  if (A.empty()) throw Error("scaled minor coordinates: empty matrix tuple");
  size_t d = A.front().size();
  for (const auto& m : A) {
    if (m.size() != d) throw Error("scaled minor coordinates: matrices must have the same size");
    for (const auto& r : m)
      if (r.size() != d) throw Error("scaled minor coordinates: matrices must be square");
    if (determinant(m) == 0) throw Error("scaled minor coordinates: singular matrix");
  }
  int n = static_cast<int>(A.size());
  std::vector<LafforgueType> out;
  for (const auto& type : compositions(static_cast<int>(d), n)) {
    LafforgueType t{type, {}};
    // all ways to pick type[j] columns of block j
    std::vector<std::vector<std::vector<int>>> choices;
    for (int j = 0; j < n; ++j) choices.push_back(subsets_of_size(static_cast<int>(d), type[static_cast<size_t>(j)]));
    std::vector<size_t> pick(static_cast<size_t>(n), 0);
    for (;;) {
      RatMatrix m(d);
      for (int j = 0; j < n; ++j)
        for (int c : choices[static_cast<size_t>(j)][pick[static_cast<size_t>(j)]])
          for (size_t r = 0; r < d; ++r) m[r].push_back(A[static_cast<size_t>(j)][r][static_cast<size_t>(c)]);
      t.coords.push_back(determinant(m));
      int j = n - 1;
      while (j >= 0 && ++pick[static_cast<size_t>(j)] == choices[static_cast<size_t>(j)].size()) pick[static_cast<size_t>(j--)] = 0;
      if (j < 0) break;
    }
    if (normalize)
      for (const auto& c : t.coords)
        if (c != 0) {
          Rational inv = 1 / c;
          for (auto& e : t.coords) e *= inv;
          break;
        }
    out.push_back(std::move(t));
  }
  return out;
}

/// (a, b, c, d) for the forms a x_i x_j + b x_i y_j + c y_i x_j + d y_i y_j
/// with (i, j) = (1,2), (1,3), (2,3).
using H23Coefficients = std::array<std::array<Rational, 4>, 3>;

/// Reads the coefficients from one generator per pair of columns on the 2x3
/// grid; a generator of multidegree e_i + e_j fills the row of {i, j}.
inline H23Coefficients h23_coefficients(const std::vector<RatPoly>& gens) {
  H23Coefficients out{};
  std::array<bool, 3> seen{};
  Shape s{2, 3};
  for (const auto& g : gens) {
    if (!(g.shape() == s) || !g.is_grid_only()) throw Error("h23_coefficients: generators must live on the 2x3 grid");
    auto u = g.multidegree();
    int row = -1;
    if (u == Multidegree{1, 1, 0}) row = 0;
    if (u == Multidegree{1, 0, 1}) row = 1;
    if (u == Multidegree{0, 1, 1}) row = 2;
    if (row < 0) throw Error("h23_coefficients: generator " + g.to_string() + " is not bilinear in two columns");
    if (seen[static_cast<size_t>(row)]) throw Error("h23_coefficients: two generators for one pair of columns");
    seen[static_cast<size_t>(row)] = true;
    int i = row == 2 ? 2 : 1, j = row == 0 ? 2 : 3;
    for (const auto& [e, c] : g.terms()) {
      int ri = e[static_cast<size_t>(s.index(1, i))] ? 0 : 1;
      int rj = e[static_cast<size_t>(s.index(1, j))] ? 0 : 1;
      out[static_cast<size_t>(row)][static_cast<size_t>(2 * ri + rj)] = c;
    }
  }
  if (!(seen[0] && seen[1] && seen[2])) throw Error("h23_coefficients: need one generator for each pair of columns");
  return out;
}

/// The 6x8 matrix of the forms times x3, y3; x2, y2; x1, y1 in the basis
/// x1x2x3, x1x2y3, x1y2x3, x1y2y3, y1x2x3, y1x2y3, y1y2x3, y1y2y3.
inline RatMatrix x23_matrix(const H23Coefficients& k) {
  // printed layout: entry = 4 * form + coefficient (a=0, b=1, c=2, d=3), -1 is zero
  static const int layout[6][8] = {
      {0, -1, 1, -1, 2, -1, 3, -1}, {-1, 0, -1, 1, -1, 2, -1, 3}, {4, 5, -1, -1, 6, 7, -1, -1},
      {-1, -1, 4, 5, -1, -1, 6, 7}, {8, 9, 10, 11, -1, -1, -1, -1}, {-1, -1, -1, -1, 8, 9, 10, 11},
  };
  RatMatrix m(6, RatVector(8, 0));
  for (size_t r = 0; r < 6; ++r)
    for (size_t c = 0; c < 8; ++c)
      if (layout[r][c] >= 0) m[r][c] = k[static_cast<size_t>(layout[r][c] / 4)][static_cast<size_t>(layout[r][c] % 4)];
  return m;
}

/// a12 a13 d23 - a12 b13 c23 - b12 a13 b23 + b12 b13 a23.
inline Rational x23_cubic(const H23Coefficients& k) {
  const auto& g12 = k[0];
  const auto& g13 = k[1];
  const auto& g23 = k[2];
  return g12[0] * g13[0] * g23[3] - g12[0] * g13[1] * g23[2] - g12[1] * g13[0] * g23[1] + g12[1] * g13[1] * g23[0];
}

inline bool x23_cubic_check(const H23Coefficients& k) { return x23_cubic(k) == 0 && rank(x23_matrix(k)) <= 4; }

}  // namespace hilbdiag
