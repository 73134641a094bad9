#pragma once

// Degree-zero homomorphisms I -> K[X]/I for monomial ideals I: the linear
// system cut out by the pairwise lcm syzygies, its nullity, and the explicit
// basis at the chain ideal.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hilbdiag/grid.hpp"
#include "hilbdiag/linalg.hpp"

namespace hilbdiag {

/// phi(g) for each minimal generator g, written in standard monomials of
/// degree deg(g). Generators not listed map to zero.
struct GradedHom {
  std::string name;
  std::map<Monomial, std::map<Monomial, Rational>> images;
};

/// Unknowns are the coefficients c(g, m) with m standard of degree deg(g).
/// For each pair (g, h) with L = lcm(g, h) and each standard t of degree
/// deg(L) there is one equation
///   sum_m [ (L/g) m = t ] c(g, m) - sum_m [ (L/h) m = t ] c(h, m) = 0.
/// Every equation has at most one unknown from each side, with coefficient +1
/// or -1.
class TangentSystem {
 public:
  struct Row {
    int a = -1;  // +1 coefficient
    int b = -1;  // -1 coefficient
  };

  explicit TangentSystem(const MonomialIdeal& I) : ideal_(I) {
    const auto& gens = I.gens();
    for (size_t k = 0; k < gens.size(); ++k)
      for (const auto& m : standard_monomials(I, gens[k].multidegree())) {
        index_[{k, m}] = static_cast<int>(unknowns_.size());
        unknowns_.push_back({k, m});
      }
    for (size_t g = 0; g < gens.size(); ++g)
      for (size_t h = g + 1; h < gens.size(); ++h) add_pair(g, h);
  }

  const MonomialIdeal& ideal() const { return ideal_; }
  size_t unknown_count() const { return unknowns_.size(); }
  const std::vector<Row>& rows() const { return rows_; }

  /// Nullity via connected components: the rows are signed edges
  /// (c_a - c_b) or grounding constraints (c_a = 0).
  size_t dimension() const {
    size_t nodes = unknowns_.size() + 1;  // last node is ground
    std::vector<size_t> parent(nodes);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    auto ground = nodes - 1;
    for (const auto& r : rows_) {
      size_t u = r.a >= 0 ? static_cast<size_t>(r.a) : ground;
      size_t v = r.b >= 0 ? static_cast<size_t>(r.b) : ground;
      parent[find(u)] = find(v);
    }
    size_t comps = 0;
    for (size_t v = 0; v < nodes; ++v) comps += find(v) == v;
    return comps - 1;
  }

  /// Nullity via exact Gaussian elimination (independent check of dimension()).
  size_t dimension_by_elimination() const {
    RowEchelon e(unknowns_.size());
    for (const auto& r : rows_) e.insert(dense(r));
    return unknowns_.size() - e.rank();
  }

  /// Coordinates of a homomorphism; throws if an image uses a non-standard
  /// monomial or a monomial of the wrong degree.
  RatVector coordinates(const GradedHom& phi) const {
    RatVector v(unknowns_.size(), 0);
    const auto& gens = ideal_.gens();
    for (const auto& [g, img] : phi.images) {
      auto it = std::find(gens.begin(), gens.end(), g);
      if (it == gens.end()) throw Error(phi.name + ": " + g.to_string() + " is not a minimal generator");
      size_t k = static_cast<size_t>(it - gens.begin());
      for (const auto& [m, c] : img) {
        auto pos = index_.find({k, m});
        if (pos == index_.end())
          throw Error(phi.name + ": image term " + m.to_string() + " is not a standard monomial of degree deg " +
                      g.to_string());
        v[static_cast<size_t>(pos->second)] += c;
      }
    }
    return v;
  }

  bool satisfies(const RatVector& v) const {
    for (const auto& r : rows_) {
      Rational s = 0;
      if (r.a >= 0) s += v[static_cast<size_t>(r.a)];
      if (r.b >= 0) s -= v[static_cast<size_t>(r.b)];
      if (s != 0) return false;
    }
    return true;
  }

 private:
  using Key = std::pair<size_t, Monomial>;

  RatVector dense(const Row& r) const {
    RatVector v(unknowns_.size(), 0);
    if (r.a >= 0) v[static_cast<size_t>(r.a)] += 1;
    if (r.b >= 0) v[static_cast<size_t>(r.b)] -= 1;
    return v;
  }

  // The unknown c(k, t / q) if q divides t and the quotient is standard.
  int lookup(size_t k, const Monomial& q, const Monomial& t) const {
    if (!q.divides(t)) return -1;
    auto it = index_.find({k, t / q});
    return it == index_.end() ? -1 : it->second;
  }

  void add_pair(size_t g, size_t h) {
    const auto& G = ideal_.gens()[g];
    const auto& H = ideal_.gens()[h];
    Monomial L = lcm(G, H);
    Monomial qg = L / G, qh = L / H;
    for (const auto& t : standard_monomials(ideal_, L.multidegree())) {
      Row r{lookup(g, qg, t), lookup(h, qh, t)};
      if (r.a < 0 && r.b < 0) continue;
      rows_.push_back(r);
    }
  }

  MonomialIdeal ideal_;
  std::vector<Key> unknowns_;
  std::map<Key, int> index_;
  std::vector<Row> rows_;
};

/// dim Hom(I, K[X]/I)_0 for a monomial ideal.
inline size_t tangent_dimension(const MonomialIdeal& I) { return TangentSystem(I).dimension(); }

/// <x_ik x_jl : i < j, k < l>.
inline MonomialIdeal chain_ideal(int d, int n) {
  Shape s{d, n};
  check_shape(s);
  std::vector<Monomial> gens;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) gens.push_back(Monomial::of(s, {{i, k}, {j, l}}));
  return MonomialIdeal(s, std::move(gens));
}

/// The maps rho_{ijl}, sigma_{ijk}, tau_{ik} on the chain ideal.
inline std::vector<GradedHom> chain_basis(int d, int n) {
  Shape s{d, n};
  check_shape(s);
  auto mono = [&](int a, int b, int c, int e) { return Monomial::of(s, {{a, b}, {c, e}}); };
  std::vector<GradedHom> out;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int l = 2; l <= n; ++l) {
        GradedHom phi{"rho_" + std::to_string(i) + std::to_string(j) + std::to_string(l), {}};
        for (int h = i; h < j; ++h)
          for (int k = 1; k < l; ++k) phi.images[mono(h, k, j, l)][mono(h, k, i, l)] = 1;
        out.push_back(std::move(phi));
      }
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int k = 1; k < n; ++k) {
        GradedHom phi{"sigma_" + std::to_string(i) + std::to_string(j) + std::to_string(k), {}};
        for (int h = i + 1; h <= j; ++h)
          for (int l = k + 1; l <= n; ++l) phi.images[mono(i, k, h, l)][mono(j, k, h, l)] = 1;
        out.push_back(std::move(phi));
      }
  for (int i = 1; i < d; ++i)
    for (int k = 1; k < n; ++k) {
      GradedHom phi{"tau_" + std::to_string(i) + std::to_string(k), {}};
      phi.images[mono(i, k, i + 1, k + 1)][mono(i, k + 1, i + 1, k)] = 1;
      out.push_back(std::move(phi));
    }
  return out;
}

struct BasisCheck {
  bool well_defined = true;  // every map satisfies the syzygy system
  bool independent = true;
  bool spanning = true;
  size_t rank = 0;
  size_t dimension = 0;
  std::string message;
  bool ok() const { return well_defined && independent && spanning; }
};

/// The maps are a basis of the solution space: they solve the system, are
/// independent, and their number equals its dimension.
inline BasisCheck verify_basis(const MonomialIdeal& I, const std::vector<GradedHom>& maps) {
  TangentSystem sys(I);
  BasisCheck res;
  res.dimension = sys.dimension();
  RowEchelon e(sys.unknown_count());
  for (const auto& phi : maps) {
    RatVector v;
    try {
      v = sys.coordinates(phi);
    } catch (const Error& err) {
      res.well_defined = false;
      res.message = err.what();
      continue;
    }
    if (!sys.satisfies(v)) {
      res.well_defined = false;
      if (res.message.empty()) res.message = phi.name + " violates a syzygy";
    }
    if (!e.insert(v)) res.independent = false;
  }
  res.rank = e.rank();
  res.spanning = res.rank == res.dimension;
  return res;
}

}  // namespace hilbdiag
