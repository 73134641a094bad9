#pragma once

// The distinguished Borel-fixed ideal Z: the index set U, its coordinate
// primes, the intersection, the explicit generator description and the shelling
// of the Stanley-Reisner complex.

#include <optional>
#include <string>
#include <vector>

#include "hilbdiag/grid.hpp"

namespace hilbdiag {

struct USet {
  int d = 1;
  int n = 1;
  std::vector<Multidegree> vectors;  // lexicographically ascending
};

inline bool in_u(int d, int n, const Multidegree& u) {
  if (static_cast<int>(u.size()) != n) return false;
  for (int e : u)
    if (e < 0 || e > d - 1) return false;
  return total_degree(u) == (n - 1) * (d - 1);
}

inline USet u_set(int d, int n) {
  check_shape({d, n});
  USet out{d, n, {}};
  Multidegree u(static_cast<size_t>(n), 0);
  int target = (n - 1) * (d - 1);
  auto rec = [&](auto&& self, int j, int left) -> void {
    if (j == n - 1) {
      if (left <= d - 1) {
        u[static_cast<size_t>(j)] = left;
        out.vectors.push_back(u);
      }
      return;
    }
    for (int e = 0; e <= std::min(d - 1, left); ++e) {
      u[static_cast<size_t>(j)] = e;
      self(self, j + 1, left - e);
    }
  };
  rec(rec, 0, target);
  return out;
}

/// Coordinate prime generated by x_{ij} with i <= u_j.
inline MonomialIdeal z_u(int d, int n, const Multidegree& u) {
  if (!in_u(d, n, u)) throw Error("z_u: vector is not in U");
  Shape s{d, n};
  std::vector<Monomial> gens;
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= u[static_cast<size_t>(j - 1)]; ++i) gens.push_back(Monomial::of(s, {{i, j}}));
  return MonomialIdeal(s, std::move(gens));
}

/// Z as the intersection of the primes Z_u over u in U.
inline MonomialIdeal build_z(int d, int n) {
  auto U = u_set(d, n);
  std::optional<MonomialIdeal> acc;
  for (const auto& u : U.vectors) {
    auto p = z_u(d, n, u);
    acc = acc ? intersect(*acc, p) : p;
  }
  return *acc;
}

/// Z from the index description: products x_{i_1 j_1} ... x_{i_k j_k} with
/// j_1 < ... < j_k, k-1 <= i_m <= d-1 and i_1 + ... + i_k <= d(k-1).
inline MonomialIdeal z_generators_direct(int d, int n) {
  Shape s{d, n};
  check_shape(s);
  std::vector<Monomial> gens;
  std::vector<int> cols, rows;
  auto rec = [&](auto&& self, int k, int next_col, int row_sum) -> void {
    if (static_cast<int>(cols.size()) == k) {
      if (row_sum > d * (k - 1)) return;
      std::vector<int> e(static_cast<size_t>(s.nvars()), 0);
      for (size_t a = 0; a < cols.size(); ++a) e[static_cast<size_t>(s.index(rows[a], cols[a]))] = 1;
      gens.emplace_back(s, std::move(e));
      return;
    }
    for (int j = next_col; j <= n; ++j)
      for (int i = k - 1; i <= d - 1; ++i) {
        cols.push_back(j);
        rows.push_back(i);
        self(self, k, j + 1, row_sum + i);
        cols.pop_back();
        rows.pop_back();
      }
  };
  for (int k = 2; k <= n && k - 1 <= d - 1; ++k) rec(rec, k, 1, 0);
  return MonomialIdeal(s, std::move(gens));
}

/// One-step exchange test: if x_{i+1,j} divides a generator m, then
/// m * x_{ij} / x_{i+1,j} lies in the ideal.
inline bool is_borel_fixed(const MonomialIdeal& I) {
  Shape s = I.shape();
  for (const auto& g : I.gens())
    for (int j = 1; j <= s.n; ++j)
      for (int i = 1; i < s.d; ++i) {
        if (g.exponent(GridVar{i + 1, j}) == 0) continue;
        auto e = g.exponents();
        --e[static_cast<size_t>(s.index(i + 1, j))];
        ++e[static_cast<size_t>(s.index(i, j))];
        if (!I.contains(Monomial(s, std::move(e)))) return false;
      }
  return true;
}

struct ShellingStep {
  Multidegree u;
  std::uint64_t facet = 0;
  std::uint64_t eta = 0;
};

struct ShellingReport {
  std::vector<ShellingStep> steps;
  bool valid = true;
  std::optional<size_t> first_violation;
  std::string message;

  IntPoly h_polynomial() const {
    IntPoly h;
    for (const auto& st : steps) {
      auto k = static_cast<size_t>(popcount(st.eta));
      if (h.size() <= k) h.resize(k + 1, 0);
      h[k] += 1;
    }
    return trimmed(h);
  }
};

/// Restriction faces of a facet order: for the k-th facet, the minimal faces
/// that are not faces of any earlier facet. The order is a shelling exactly
/// when each such family is a single set; returns std::nullopt otherwise.
inline std::optional<std::vector<std::uint64_t>> shelling_restrictions(const std::vector<std::uint64_t>& facets) {
  std::vector<std::uint64_t> out;
  for (size_t k = 0; k < facets.size(); ++k) {
    std::vector<std::uint64_t> gaps;
    for (size_t e = 0; e < k; ++e) gaps.push_back(facets[k] & ~facets[e]);
    auto minimal_new = minimal_transversals(gaps);
    if (minimal_new.size() != 1) return std::nullopt;
    out.push_back(minimal_new.front());
  }
  return out;
}

/// Facets F_u = {x_ij : i > u_j} of Z's complex in lex order of u, checked
/// against eta_u = {x_ij : j > 1, i = u_j + 1 < d}.
inline ShellingReport shelling(int d, int n) {
  Shape s{d, n};
  ShellingReport rep;
  std::vector<std::uint64_t> facets;
  for (const auto& u : u_set(d, n).vectors) {
    ShellingStep st;
    st.u = u;
    for (int j = 1; j <= n; ++j) {
      int uj = u[static_cast<size_t>(j - 1)];
      for (int i = uj + 1; i <= d; ++i) st.facet |= std::uint64_t{1} << s.index(i, j);
      if (j > 1 && uj + 1 < d) st.eta |= std::uint64_t{1} << s.index(uj + 1, j);
    }
    facets.push_back(st.facet);
    rep.steps.push_back(st);
  }
  for (size_t k = 0; k < facets.size(); ++k) {
    std::vector<std::uint64_t> gaps;
    for (size_t e = 0; e < k; ++e) gaps.push_back(facets[k] & ~facets[e]);
    auto minimal_new = minimal_transversals(gaps);
    if (minimal_new.size() != 1 || minimal_new.front() != rep.steps[k].eta) {
      rep.valid = false;
      rep.first_violation = k;
      rep.message = "facet " + std::to_string(k) + " has " + std::to_string(minimal_new.size()) +
                    " minimal new faces, expected the single face eta_u";
      break;
    }
  }
  return rep;
}

/// h(z) = sum_i binom(d-1, i) binom(n-1, i) z^i.
inline IntPoly h_closed_form(int d, int n) {
  IntPoly h;
  for (int i = 0; i <= std::min(d - 1, n - 1); ++i) h.push_back(binomial(d - 1, i) * binomial(n - 1, i));
  return trimmed(h);
}

}  // namespace hilbdiag
