#pragma once

// The ideal of 2x2 minors and its transforms under tuples of matrices:
// special fibers of one-parameter degenerations (saturation route and
// weight route), generic initial ideal sampling, graded piece dimensions
// and Alexander duals.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hilbdiag/borel.hpp"
#include "hilbdiag/groebner.hpp"
#include "hilbdiag/linalg.hpp"

namespace hilbdiag {

/// x_{ik} x_{jl} - x_{jk} x_{il} for i < j, k < l.
inline std::vector<RatPoly> minors_ideal(int d, int n, int aux = 0) {
  Shape s{d, n};
  check_shape(s);
  std::vector<RatPoly> out;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          out.push_back(RatPoly::grid_var(s, aux, i, k) * RatPoly::grid_var(s, aux, j, l) -
                        RatPoly::grid_var(s, aux, j, k) * RatPoly::grid_var(s, aux, i, l));
  return out;
}

// ---- Polynomials in z as matrix entries ----

inline ZPoly zpoly_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return zpoly_trim(r);
}

inline ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return zpoly_trim(r);
}

inline ZPoly zpoly_monomial(int k, const Rational& c = 1) {
  ZPoly r(static_cast<size_t>(k) + 1, 0);
  r[static_cast<size_t>(k)] = c;
  return zpoly_trim(r);
}

using ZMatrix = std::vector<std::vector<ZPoly>>;

inline ZPoly zdeterminant(const ZMatrix& m) {
  size_t n = m.size();
  if (n == 0) return {1};
  if (n == 1) return m[0][0];
  ZPoly det;
  for (size_t c = 0; c < n; ++c) {
    ZMatrix minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<ZPoly> row;
      for (size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    ZPoly term = zpoly_mul(m[0][c], zdeterminant(minor));
    if (c % 2 == 1)
      for (auto& v : term) v = -v;
    det = zpoly_add(det, term);
  }
  return det;
}

/// n square d x d matrices with entries in Q[z] (constants for matrices over Q).
struct MatrixTuple {
  int d = 0;
  std::vector<ZMatrix> mats;

  int n() const { return static_cast<int>(mats.size()); }

  static MatrixTuple identity(int d, int n) {
    MatrixTuple t{d, {}};
    for (int j = 0; j < n; ++j) {
      ZMatrix m(static_cast<size_t>(d), std::vector<ZPoly>(static_cast<size_t>(d)));
      for (int i = 0; i < d; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = {1};
      t.mats.push_back(std::move(m));
    }
    return t;
  }

  static MatrixTuple from_rational(const std::vector<RatMatrix>& ms) {
    if (ms.empty()) throw Error("empty matrix tuple");
    MatrixTuple t{static_cast<int>(ms.front().size()), {}};
    for (const auto& m : ms) {
      ZMatrix zm;
      for (const auto& row : m) {
        std::vector<ZPoly> zr;
        for (const auto& v : row) zr.push_back(zpoly_trim({v}));
        zm.push_back(std::move(zr));
      }
      t.mats.push_back(std::move(zm));
    }
    t.validate();
    return t;
  }

  /// Y_j = diag(z^{w_1j}, ..., z^{w_dj}); w is d x n, row-major.
  static MatrixTuple diagonal_monomial(int d, int n, const std::vector<std::vector<int>>& w) {
    MatrixTuple t{d, {}};
    for (int j = 0; j < n; ++j) {
      ZMatrix m(static_cast<size_t>(d), std::vector<ZPoly>(static_cast<size_t>(d)));
      for (int i = 0; i < d; ++i)
        m[static_cast<size_t>(i)][static_cast<size_t>(i)] =
            zpoly_monomial(w[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      t.mats.push_back(std::move(m));
    }
    return t;
  }

  bool is_constant() const {
    for (const auto& m : mats)
      for (const auto& row : m)
        for (const auto& v : row)
          if (v.size() > 1) return false;
    return true;
  }

  /// Throws unless every matrix is square of size d with nonzero determinant.
  void validate() const {
    if (d < 1) throw Error("matrix size must be positive");
    for (size_t j = 0; j < mats.size(); ++j) {
      if (mats[j].size() != static_cast<size_t>(d)) throw Error("matrix " + std::to_string(j + 1) + " has wrong size");
      for (const auto& row : mats[j])
        if (row.size() != static_cast<size_t>(d))
          throw Error("matrix " + std::to_string(j + 1) + " is not square");
      if (zdeterminant(mats[j]).empty()) throw Error("matrix " + std::to_string(j + 1) + " is singular");
    }
  }
};

/// Substitutes column j of X by Y_j times that column. Entries involving z
/// require the generators to carry z as auxiliary variable 0.
inline std::vector<RatPoly> apply_matrices(const MatrixTuple& Y, const std::vector<RatPoly>& gens) {
  Y.validate();
  if (gens.empty()) return {};
  Shape s = gens.front().shape();
  int aux = gens.front().aux();
  if (s.d != Y.d || s.n != Y.n()) throw Error("apply_matrices: tuple does not match the grid");
  if (!Y.is_constant() && aux < 1) throw Error("apply_matrices: z-entries need a ring containing z");
  std::vector<RatPoly> images;
  for (int idx = 0; idx < s.nvars(); ++idx) {
    int i = s.row_of(idx), j = s.col_of(idx);
    RatPoly img(s, aux);
    const auto& M = Y.mats[static_cast<size_t>(j - 1)];
    for (int k = 1; k <= s.d; ++k) {
      const ZPoly& a = M[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)];
      if (a.empty()) continue;
      RatPoly coeff = aux >= 1 ? zpoly_to_ratpoly(a, s, aux) : RatPoly::constant(s, aux, a[0]);
      img += coeff * RatPoly::grid_var(s, aux, k, j);
    }
    images.push_back(std::move(img));
  }
  for (int k = 0; k < aux; ++k) images.push_back(RatPoly::aux_var(s, aux, k));
  std::vector<RatPoly> out;
  for (const auto& g : gens) out.push_back(g.substitute(images));
  return out;
}

struct SpecialFiber {
  std::vector<RatPoly> basis;  // reduced Groebner basis over Q[X], degree-lex
  bool monomial = false;
  bool squarefree = false;
  std::optional<MonomialIdeal> ideal;
};

inline SpecialFiber fiber_from_basis(Shape s, std::vector<RatPoly> basis) {
  SpecialFiber f;
  f.basis = std::move(basis);
  f.monomial = true;
  std::vector<Monomial> ms;
  for (const auto& g : f.basis) {
    if (g.size() != 1) {
      f.monomial = false;
      break;
    }
    ms.push_back(g.grid_monomial(g.terms().begin()->first));
  }
  if (f.monomial) {
    f.ideal = MonomialIdeal(s, std::move(ms));
    f.squarefree = f.ideal->is_squarefree();
  }
  return f;
}

/// Special fiber of the degeneration given by Y(z): transform the minors,
/// clear the z-content of each, saturate by z, then set z = 0.
inline SpecialFiber special_fiber(const MatrixTuple& Y) {
  Y.validate();
  int d = Y.d, n = Y.n();
  Shape s{d, n};
  int zi = s.nvars();
  std::vector<RatPoly> L;
  for (const auto& g : apply_matrices(Y, minors_ideal(d, n, 1))) {
    if (g.is_zero()) continue;
    L.push_back(g.strip_power(zi));
  }
  std::vector<RatPoly> at_zero;
  for (const auto& g : saturate_z(L)) {
    auto h = g.evaluate(zi, 0).with_aux(0);
    if (!h.is_zero()) at_zero.push_back(std::move(h));
  }
  return fiber_from_basis(s, buchberger(at_zero, TermOrder::deglex(s.nvars())));
}

struct WeightRouteResult {
  MonomialIdeal ideal;
  bool decisive = true;
  bool squarefree = false;
};

/// Term order used by the weight route: total degree, then smaller w-weight
/// first, then lex. w is d x n, row-major.
inline TermOrder min_weight_order(Shape s, const std::vector<std::vector<int>>& w) {
  std::vector<std::int64_t> row(static_cast<size_t>(s.nvars()));
  for (int idx = 0; idx < s.nvars(); ++idx)
    row[static_cast<size_t>(idx)] =
        -static_cast<std::int64_t>(w[static_cast<size_t>(s.row_of(idx) - 1)][static_cast<size_t>(s.col_of(idx) - 1)]);
  return TermOrder::graded_weight(s.nvars(), {row});
}

/// in_w(A o I_2(X)) where the leading form of a polynomial collects the terms
/// of smallest w-weight. This is the special fiber of Y_j(z) = A_j diag(z^{w_.j}).
inline WeightRouteResult weight_initial_route(const std::vector<std::vector<int>>& w, const MatrixTuple& A) {
  if (!A.is_constant()) throw Error("weight route needs matrices over Q");
  int d = A.d, n = A.n();
  Shape s{d, n};
  if (w.size() != static_cast<size_t>(d)) throw Error("weight matrix must be d x n");
  for (const auto& r : w)
    if (r.size() != static_cast<size_t>(n)) throw Error("weight matrix must be d x n");
  auto gens = apply_matrices(A, minors_ideal(d, n));
  auto res = initial_ideal(gens, min_weight_order(s, w));
  WeightRouteResult out{res.ideal, res.decisive, res.ideal.is_squarefree()};
  return out;
}

/// A_j * diag(z^{w_1j}, ..., z^{w_dj}).
inline MatrixTuple weighted_tuple(const MatrixTuple& A, const std::vector<std::vector<int>>& w) {
  MatrixTuple Y = A;
  for (int j = 0; j < A.n(); ++j)
    for (int r = 0; r < A.d; ++r)
      for (int c = 0; c < A.d; ++c) {
        auto& e = Y.mats[static_cast<size_t>(j)][static_cast<size_t>(r)][static_cast<size_t>(c)];
        e = zpoly_mul(e, zpoly_monomial(w[static_cast<size_t>(c)][static_cast<size_t>(j)]));
      }
  return Y;
}

// ---- Sampling ----

/// Integer entries in [-9, 9], resampled until invertible. Lower-triangular
/// samples must be generic for the Borel-fixed limit, and small entries
/// collide too often, so they draw nonzero entries from [-10^6, 10^6].
inline RatMatrix random_invertible(int d, std::mt19937_64& rng, bool lower_triangular = false) {
  std::uniform_int_distribution<int> any(-9, 9), wide(1, 2000000);
  auto entry = [&](std::mt19937_64& g) {
    if (!lower_triangular) return any(g);
    int v = wide(g);
    return v <= 1000000 ? v : 1000000 - v;
  };
  for (;;) {
    RatMatrix m(static_cast<size_t>(d), RatVector(static_cast<size_t>(d), 0));
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        if (!lower_triangular || c <= r) m[static_cast<size_t>(r)][static_cast<size_t>(c)] = entry(rng);
    if (determinant(m) != 0) return m;
  }
}

inline std::vector<std::vector<int>> random_weights(int d, int n, std::mt19937_64& rng, int bound,
                                                     bool increasing_down = false) {
  std::uniform_int_distribution<int> draw(0, bound);
  std::vector<std::vector<int>> w(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(n)));
  for (int j = 0; j < n; ++j) {
    std::vector<int> col;
    for (int i = 0; i < d; ++i) col.push_back(draw(rng));
    if (increasing_down) std::sort(col.begin(), col.end());
    for (int i = 0; i < d; ++i) w[static_cast<size_t>(i)][static_cast<size_t>(j)] = col[static_cast<size_t>(i)];
  }
  return w;
}

struct GinTrial {
  int index = 0;
  std::vector<RatMatrix> matrices;
  std::vector<std::vector<int>> weights;
  MonomialIdeal ideal;
  int retries = 0;
  bool squarefree = false;
  bool series_equal = false;
  bool equals_z = false;
};

struct GinReport {
  int d = 0, n = 0;
  bool borel = false;
  std::vector<GinTrial> trials;
  int total_retries = 0;

  bool all_ok() const {
    for (const auto& t : trials)
      if (!t.squarefree || !t.series_equal || (borel && !t.equals_z)) return false;
    return true;
  }
};

/// One trial with its own generator seeded from (seed, index), so trials can
/// run in any order. In Borel mode the matrices are lower triangular
/// (x_ij -> sum_{k<=i} a_ik x_kj) and the weights increase down each column.
inline GinTrial gin_trial(int d, int n, std::uint64_t seed, int index, bool borel, int weight_bound = 1000) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(borel)};
  std::mt19937_64 rng(seq);
  GinTrial t;
  t.index = index;
  for (int j = 0; j < n; ++j) t.matrices.push_back(random_invertible(d, rng, borel));
  auto A = MatrixTuple::from_rational(t.matrices);
  for (;;) {
    t.weights = random_weights(d, n, rng, weight_bound, borel);
    auto r = weight_initial_route(t.weights, A);
    if (!r.decisive) {
      ++t.retries;
      if (t.retries > 1000) throw Error("gin_sample: could not find decisive weights");
      continue;
    }
    t.ideal = r.ideal;
    t.squarefree = r.squarefree;
    break;
  }
  t.series_equal = t.squarefree && series_equals_diagonal(t.ideal);
  t.equals_z = t.ideal == build_z(d, n);
  return t;
}

inline GinReport gin_sample(int d, int n, int trials, std::uint64_t seed, bool borel = false) {
  GinReport rep{d, n, borel, {}, 0};
  for (int k = 0; k < trials; ++k) {
    rep.trials.push_back(gin_trial(d, n, seed, k, borel));
    rep.total_retries += rep.trials.back().retries;
  }
  return rep;
}

// ---- Hilbert function of arbitrary homogeneous ideals ----

struct GradedPiece {
  size_t monomials = 0;
  size_t rank = 0;
  size_t quotient() const { return monomials - rank; }
};

/// Rank of I_u inside K[X]_u, spanned by m * g with deg(m * g) = u.
inline GradedPiece graded_piece(const std::vector<RatPoly>& gens, const Multidegree& u) {
  if (gens.empty()) throw Error("graded_piece: no generators (ring unknown)");
  Shape s = gens.front().shape();
  auto basis = monomials_of_degree(s, u);
  std::map<Exponents, size_t> column;
  for (size_t k = 0; k < basis.size(); ++k) column[basis[k].exponents()] = k;
  RowEchelon ech(basis.size());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_grid_only()) throw Error("graded_piece: generator involves auxiliary variables");
    Multidegree v = g.multidegree();
    Multidegree rest(u.size());
    bool fits = true;
    for (size_t j = 0; j < u.size(); ++j) {
      rest[j] = u[j] - v[j];
      if (rest[j] < 0) fits = false;
    }
    if (!fits) continue;
    for (const auto& m : monomials_of_degree(s, rest)) {
      RatVector row(basis.size(), 0);
      for (const auto& [e, c] : g.terms()) {
        Exponents f(static_cast<size_t>(s.nvars()));
        for (size_t i = 0; i < f.size(); ++i) f[i] = e[i] + m.exponents()[i];
        row[column.at(f)] += c;
      }
      ech.insert(std::move(row));
      if (ech.rank() == basis.size()) break;
    }
    if (ech.rank() == basis.size()) break;
  }
  return {basis.size(), ech.rank()};
}

/// dim_Q (K[X]/I)_u.
inline size_t graded_piece_dim(const std::vector<RatPoly>& gens, const Multidegree& u) {
  if (gens.empty()) throw Error("graded_piece_dim: no generators (ring unknown)");
  return graded_piece(gens, u).quotient();
}

inline std::vector<RatPoly> monomial_generators(const MonomialIdeal& I) {
  std::vector<RatPoly> out;
  for (const auto& m : I.gens()) out.push_back(RatPoly::from_monomial(m));
  return out;
}

/// Checks graded_piece_dim against binom(|u|+d-1, d-1) for all |u| <= bound.
/// Returns the first failing degree, if any.
inline std::optional<Multidegree> first_hf_mismatch(const std::vector<RatPoly>& gens, int bound) {
  Shape s = gens.front().shape();
  std::optional<Multidegree> bad;
  Multidegree u(static_cast<size_t>(s.n), 0);
  auto rec = [&](auto&& self, int j, int left) -> void {
    if (bad) return;
    if (j == s.n) {
      if (Integer(graded_piece_dim(gens, u)) != target_hf(s.d, u)) bad = u;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      u[static_cast<size_t>(j)] = e;
      self(self, j + 1, left - e);
    }
    u[static_cast<size_t>(j)] = 0;
  };
  rec(rec, 0, bound);
  return bad;
}

/// Generated by the complements of the facets of the Stanley-Reisner complex.
inline MonomialIdeal alexander_dual(const MonomialIdeal& I) {
  require_squarefree(I, "alexander_dual");
  Shape s = I.shape();
  auto cx = stanley_reisner(I);
  std::vector<std::uint64_t> masks;
  for (auto f : cx.facets) masks.push_back(full_mask(s) & ~f);
  return MonomialIdeal::from_masks(s, masks);
}

}  // namespace hilbdiag
