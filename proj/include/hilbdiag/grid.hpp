#pragma once

// Variables on the d x n grid, monomials with their Z^n column grading,
// monomial ideals, Stanley-Reisner complexes and multigraded Hilbert data.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hilbdiag/common.hpp"

namespace hilbdiag {

/// Dimensions of the variable grid: d rows, n columns.
struct Shape {
  int d = 1;
  int n = 1;

  int nvars() const { return d * n; }
  /// Row-major flat index of x_{row,col} (both 1-based).
  int index(int row, int col) const { return (row - 1) * n + (col - 1); }
  int row_of(int idx) const { return idx / n + 1; }
  int col_of(int idx) const { return idx % n + 1; }

  bool operator==(const Shape&) const = default;
};

struct GridVar {
  int row = 1;
  int col = 1;
  bool operator==(const GridVar&) const = default;
};

inline void check_shape(Shape s) {
  if (s.d < 1 || s.n < 1) throw Error("grid dimensions must be positive");
  if (s.nvars() > 64) throw Error("grid has more than 64 variables");
}

inline std::string var_name(Shape s, int idx) {
  int r = s.row_of(idx), c = s.col_of(idx);
  if (s.d <= 9 && s.n <= 9) return "x" + std::to_string(r) + std::to_string(c);
  return "x[" + std::to_string(r) + "," + std::to_string(c) + "]";
}

using Multidegree = std::vector<int>;

inline int total_degree(const Multidegree& u) { return std::accumulate(u.begin(), u.end(), 0); }

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Shape s) : shape_(s), exps_(static_cast<size_t>(s.nvars()), 0) {}
  Monomial(Shape s, std::vector<int> exps) : shape_(s), exps_(std::move(exps)) {
    if (static_cast<int>(exps_.size()) != s.nvars()) throw Error("exponent vector length mismatch");
    for (int e : exps_)
      if (e < 0) throw Error("negative exponent");
  }

  /// Squarefree monomial with the given support.
  static Monomial from_mask(Shape s, std::uint64_t mask) {
    Monomial m(s);
    for (int v : bits_of(mask)) m.exps_[static_cast<size_t>(v)] = 1;
    return m;
  }

  static Monomial of(Shape s, std::initializer_list<GridVar> vars) {
    Monomial m(s);
    for (auto v : vars) {
      if (v.row < 1 || v.row > s.d || v.col < 1 || v.col > s.n) throw Error("grid variable out of range");
      ++m.exps_[static_cast<size_t>(s.index(v.row, v.col))];
    }
    return m;
  }

  Shape shape() const { return shape_; }
  const std::vector<int>& exponents() const { return exps_; }
  int exponent(int idx) const { return exps_[static_cast<size_t>(idx)]; }
  int exponent(GridVar v) const { return exponent(shape_.index(v.row, v.col)); }

  int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

  Multidegree multidegree() const {
    Multidegree u(static_cast<size_t>(shape_.n), 0);
    for (int i = 0; i < shape_.nvars(); ++i) u[static_cast<size_t>(shape_.col_of(i) - 1)] += exps_[static_cast<size_t>(i)];
    return u;
  }

  bool divides(const Monomial& other) const {
    for (size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
  }

  std::uint64_t support_mask() const {
    std::uint64_t m = 0;
    for (size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0) m |= std::uint64_t{1} << i;
    return m;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
  }

  /// this / o; o must divide this.
  Monomial operator/(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < exps_.size(); ++i) {
      r.exps_[i] -= o.exps_[i];
      if (r.exps_[i] < 0) throw Error("monomial division is not exact");
    }
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  std::strong_ordering operator<=>(const Monomial& o) const { return exps_ <=> o.exps_; }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < shape_.nvars(); ++i) {
      int e = exps_[static_cast<size_t>(i)];
      if (e == 0) continue;
      if (!s.empty()) s += "*";
      s += var_name(shape_, i);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
  }

 private:
  Shape shape_;
  std::vector<int> exps_;
};

inline Multidegree multidegree(const Monomial& m) { return m.multidegree(); }

/// Canonical generator order: by degree, then lexicographically descending
/// exponents (x11 is the largest variable).
inline bool canonical_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents() > b.exponents();
}

/// Removes duplicates and non-minimal elements; result in canonical order.
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(Shape s) : shape_(s) { check_shape(s); }
  MonomialIdeal(Shape s, std::vector<Monomial> gens) : shape_(s) {
    check_shape(s);
    for (const auto& g : gens)
      if (!(g.shape() == s)) throw Error("generator lives on a different grid");
    gens_ = minimalize(std::move(gens));
  }

  static MonomialIdeal from_masks(Shape s, const std::vector<std::uint64_t>& masks) {
    std::vector<Monomial> gens;
    for (auto m : masks) gens.push_back(Monomial::from_mask(s, m));
    return MonomialIdeal(s, std::move(gens));
  }

  Shape shape() const { return shape_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
  }

  int max_generator_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  std::vector<std::uint64_t> support_masks() const {
    std::vector<std::uint64_t> out;
    for (const auto& g : gens_) out.push_back(g.support_mask());
    return out;
  }

  bool operator==(const MonomialIdeal& o) const { return shape_ == o.shape_ && gens_ == o.gens_; }

  std::string to_string() const {
    std::string s = "<";
    for (size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
    return s + ">";
  }

 private:
  Shape shape_;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.shape() == b.shape())) throw Error("intersecting ideals on different grids");
  std::vector<Monomial> gens;
  for (const auto& g : a.gens())
    for (const auto& h : b.gens()) gens.push_back(lcm(g, h));
  return MonomialIdeal(a.shape(), std::move(gens));
}

inline void require_squarefree(const MonomialIdeal& I, const char* what) {
  if (!I.is_squarefree()) throw Error(std::string(what) + ": ideal is not squarefree");
}

// ---------------------------------------------------------------------------
// Squarefree ideals as simplicial complexes.

/// Minimal sets meeting every given set (minimal vertex covers of the
/// hypergraph). An empty family yields the single empty transversal.
inline std::vector<std::uint64_t> minimal_transversals(const std::vector<std::uint64_t>& family) {
  std::vector<std::uint64_t> covers{0};
  for (auto edge : family) {
    if (edge == 0) return {};
    std::vector<std::uint64_t> next;
    for (auto t : covers) {
      if (t & edge) {
        next.push_back(t);
      } else {
        for (int v : bits_of(edge)) next.push_back(t | (std::uint64_t{1} << v));
      }
    }
    std::sort(next.begin(), next.end(), [](auto x, auto y) {
      int px = popcount(x), py = popcount(y);
      return px != py ? px < py : x < y;
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    covers.clear();
    for (auto t : next) {
      bool dominated = std::any_of(covers.begin(), covers.end(), [&](auto c) { return (c & t) == c; });
      if (!dominated) covers.push_back(t);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

struct SimplicialComplex {
  Shape shape;
  std::vector<std::uint64_t> facets;  // sorted ascending, pairwise incomparable

  std::uint64_t vertices() const {
    std::uint64_t v = 0;
    for (auto f : facets) v |= f;
    return v;
  }
  int dimension() const {
    int m = -1;
    for (auto f : facets) m = std::max(m, popcount(f) - 1);
    return m;
  }
  bool is_pure() const {
    return std::all_of(facets.begin(), facets.end(), [&](auto f) { return popcount(f) - 1 == dimension(); });
  }
  bool operator==(const SimplicialComplex&) const = default;
};

inline std::uint64_t full_mask(Shape s) {
  return s.nvars() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s.nvars()) - 1;
}

inline SimplicialComplex complex_from_facets(Shape s, std::vector<std::uint64_t> facets) {
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<std::uint64_t> kept;
  for (auto f : facets) {
    bool contained = std::any_of(facets.begin(), facets.end(), [&](auto g) { return g != f && (f & g) == f; });
    if (!contained) kept.push_back(f);
  }
  return {s, kept};
}

/// Facets of the complex whose faces are the squarefree monomials outside I.
inline SimplicialComplex stanley_reisner(const MonomialIdeal& I) {
  require_squarefree(I, "stanley_reisner");
  std::vector<std::uint64_t> facets;
  for (auto cover : minimal_transversals(I.support_masks())) facets.push_back(full_mask(I.shape()) & ~cover);
  return complex_from_facets(I.shape(), std::move(facets));
}

/// The squarefree ideal generated by the minimal non-faces.
inline MonomialIdeal ideal_of_complex(const SimplicialComplex& c) {
  std::vector<std::uint64_t> complements;
  for (auto f : c.facets) complements.push_back(full_mask(c.shape) & ~f);
  return MonomialIdeal::from_masks(c.shape, minimal_transversals(complements));
}

inline std::unordered_set<std::uint64_t> all_faces(const SimplicialComplex& c) {
  std::unordered_set<std::uint64_t> faces;
  for (auto f : c.facets) {
    std::uint64_t sub = f;
    while (true) {
      faces.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  return faces;
}

// ---------------------------------------------------------------------------
// Integer polynomials.

/// Univariate integer polynomial, coefficient of z^i at index i.
using IntPoly = std::vector<Integer>;

inline IntPoly trimmed(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trimmed(r);
}

inline IntPoly one_minus_z_pow(int e) {
  IntPoly r(static_cast<size_t>(e) + 1);
  for (int k = 0; k <= e; ++k) r[static_cast<size_t>(k)] = (k % 2 ? -1 : 1) * binomial(e, k);
  return r;
}

inline std::string to_string(const IntPoly& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    Integer c = p[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    if (c != 1 || i == 0) s += c.get_str();
    if (i > 0) s += (c != 1 ? "*z" : "z") + (i > 1 ? "^" + std::to_string(i) : std::string());
  }
  return s.empty() ? "0" : s;
}

/// Integer polynomial in t_1..t_n; keys are exponent vectors.
class KPolynomial {
 public:
  using Terms = std::map<Multidegree, Integer>;

  KPolynomial() = default;
  explicit KPolynomial(int n) : n_(n) {}
  static KPolynomial one(int n) {
    KPolynomial p(n);
    p.add_term(Multidegree(static_cast<size_t>(n), 0), 1);
    return p;
  }

  int nvars() const { return n_; }
  const Terms& terms() const { return terms_; }

  void add_term(const Multidegree& u, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(u, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Integer coefficient(const Multidegree& u) const {
    auto it = terms_.find(u);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  KPolynomial operator+(const KPolynomial& o) const {
    KPolynomial r = *this;
    for (const auto& [u, c] : o.terms_) r.add_term(u, c);
    return r;
  }

  KPolynomial operator-(const KPolynomial& o) const {
    KPolynomial r = *this;
    for (const auto& [u, c] : o.terms_) r.add_term(u, -c);
    return r;
  }

  KPolynomial operator*(const KPolynomial& o) const {
    KPolynomial r(n_);
    for (const auto& [u, c] : terms_)
      for (const auto& [v, e] : o.terms_) {
        Multidegree w(u);
        for (size_t i = 0; i < w.size(); ++i) w[i] += v[i];
        r.add_term(w, c * e);
      }
    return r;
  }

  /// Substitutes t_j -> z for every j.
  IntPoly specialize() const {
    IntPoly p;
    for (const auto& [u, c] : terms_) {
      auto k = static_cast<size_t>(total_degree(u));
      if (p.size() <= k) p.resize(k + 1, 0);
      p[k] += c;
    }
    return trimmed(p);
  }

  bool operator==(const KPolynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [u, c] : terms_) {
      Integer a = c;
      bool neg = a < 0;
      if (neg) a = -a;
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      std::string mono;
      for (size_t j = 0; j < u.size(); ++j) {
        if (u[j] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "t" + std::to_string(j + 1) + (u[j] > 1 ? "^" + std::to_string(u[j]) : "");
      }
      if (mono.empty()) s += a.get_str();
      else s += (a != 1 ? a.get_str() + "*" : "") + mono;
    }
    return s;
  }

 private:
  int n_ = 0;
  Terms terms_;
};

/// Sum of t^u over the codimension-minimal primes: u_j counts the column-j
/// variables outside a facet of maximal dimension.
inline KPolynomial multidegree_of_ideal(const MonomialIdeal& I) {
  auto cx = stanley_reisner(I);
  Shape s = I.shape();
  KPolynomial out(s.n);
  int top = cx.dimension() + 1;
  for (auto f : cx.facets) {
    if (popcount(f) != top) continue;
    Multidegree u(static_cast<size_t>(s.n), 0);
    for (int v : bits_of(full_mask(s) & ~f)) ++u[static_cast<size_t>(s.col_of(v) - 1)];
    out.add_term(u, 1);
  }
  return out;
}

/// Numerator N(t) of the Hilbert series of K[X]/I over prod_j (1 - t_j)^d,
/// summed face by face. Exponential in the facet size.
inline KPolynomial k_polynomial(const MonomialIdeal& I) {
  auto cx = stanley_reisner(I);
  Shape s = I.shape();
  std::map<Multidegree, Integer> by_profile;
  for (auto face : all_faces(cx)) {
    Multidegree f(static_cast<size_t>(s.n), 0);
    for (int v : bits_of(face)) ++f[static_cast<size_t>(s.col_of(v) - 1)];
    by_profile[f] += 1;
  }
  KPolynomial out(s.n);
  for (const auto& [f, count] : by_profile) {
    KPolynomial term = KPolynomial::one(s.n);
    for (int j = 0; j < s.n; ++j) {
      int fj = f[static_cast<size_t>(j)];
      IntPoly base = one_minus_z_pow(s.d - fj);
      KPolynomial col(s.n);
      for (size_t k = 0; k < base.size(); ++k) {
        Multidegree e(static_cast<size_t>(s.n), 0);
        e[static_cast<size_t>(j)] = fj + static_cast<int>(k);
        col.add_term(e, base[k]);
      }
      term = term * col;
    }
    KPolynomial scaled(s.n);
    for (const auto& [u, c] : term.terms()) scaled.add_term(u, c * count);
    out = out + scaled;
  }
  return out;
}

inline Integer target_hf(int d, const Multidegree& u) {
  if (d < 1) throw Error("target_hf: d must be positive");
  return binomial(total_degree(u) + d - 1, d - 1);
}

/// Calls fn(exponents) for every monomial of multidegree u.
template <class Fn>
void for_each_monomial(Shape s, const Multidegree& u, Fn&& fn) {
  if (static_cast<int>(u.size()) != s.n) throw Error("multidegree length mismatch");
  std::vector<int> exps(static_cast<size_t>(s.nvars()), 0);
  // Recursive over (column, row) positions; the last row of a column takes the remainder.
  auto rec = [&](auto&& self, int col, int row, int left) -> void {
    if (col == s.n) {
      fn(static_cast<const std::vector<int>&>(exps));
      return;
    }
    auto idx = static_cast<size_t>(s.index(row, col + 1));
    if (row == s.d) {
      exps[idx] = left;
      int next = col + 1 < s.n ? u[static_cast<size_t>(col + 1)] : 0;
      self(self, col + 1, 1, next);
      exps[idx] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      exps[idx] = e;
      self(self, col, row + 1, left - e);
    }
    exps[idx] = 0;
  };
  for (int e : u)
    if (e < 0) throw Error("negative multidegree");
  rec(rec, 0, 1, s.n > 0 ? u[0] : 0);
}

inline std::vector<Monomial> monomials_of_degree(Shape s, const Multidegree& u) {
  std::vector<Monomial> out;
  for_each_monomial(s, u, [&](const std::vector<int>& e) { out.emplace_back(s, e); });
  return out;
}

/// Standard monomials (those outside I) of multidegree u.
inline std::vector<Monomial> standard_monomials(const MonomialIdeal& I, const Multidegree& u) {
  std::vector<Monomial> out;
  for_each_monomial(I.shape(), u, [&](const std::vector<int>& e) {
    Monomial m(I.shape(), e);
    if (!I.contains(m)) out.push_back(std::move(m));
  });
  return out;
}

/// dim (K[X]/I)_u by enumerating the monomials of degree u.
inline Integer hf_at(const MonomialIdeal& I, const Multidegree& u) {
  Integer count = 0;
  for_each_monomial(I.shape(), u, [&](const std::vector<int>& e) {
    if (!I.contains(Monomial(I.shape(), e))) count += 1;
  });
  return count;
}

/// K-polynomial of any ideal with Hilbert function binom(|u|+d-1, d-1),
/// obtained by multiplying that series by prod_j (1 - t_j)^d. Exponents never
/// exceed d per variable, so the truncated product is exact.
inline KPolynomial diagonal_k_polynomial(int d, int n) {
  check_shape({d, n});
  size_t side = static_cast<size_t>(d) + 1;
  size_t total = 1;
  for (int j = 0; j < n; ++j) total *= side;
  std::vector<Integer> grid(total);
  auto decode = [&](size_t flat) {
    Multidegree u(static_cast<size_t>(n));
    for (int j = n - 1; j >= 0; --j) {
      u[static_cast<size_t>(j)] = static_cast<int>(flat % side);
      flat /= side;
    }
    return u;
  };
  for (size_t f = 0; f < total; ++f) grid[f] = target_hf(d, decode(f));
  IntPoly factor = one_minus_z_pow(d);
  size_t stride = 1;
  for (int j = n - 1; j >= 0; --j) {
    std::vector<Integer> next(total, 0);
    for (size_t f = 0; f < total; ++f) {
      size_t pos = (f / stride) % side;
      for (size_t k = 0; k <= pos && k < factor.size(); ++k) next[f] += factor[k] * grid[f - k * stride];
    }
    grid = std::move(next);
    stride *= side;
  }
  KPolynomial out(n);
  for (size_t f = 0; f < total; ++f) out.add_term(decode(f), grid[f]);
  return out;
}

/// Certifies that a squarefree monomial ideal has the Hilbert function of the
/// diagonal: equal Hilbert series over the common denominator.
inline bool series_equals_diagonal(const MonomialIdeal& I) {
  require_squarefree(I, "series_equals_diagonal");
  return k_polynomial(I) == diagonal_k_polynomial(I.shape().d, I.shape().n);
}

}  // namespace hilbdiag
