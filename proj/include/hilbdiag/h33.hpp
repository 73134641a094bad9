#pragma once

// Monomial ideals of H(3,3) as two-dimensional subcomplexes of the product
// of three triangles: the scan over one cell per type, the symmetry classes
// under S_3 wr S_3, and the data of the summary table.

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "hilbdiag/deligne.hpp"
#include "hilbdiag/grid.hpp"
#include "hilbdiag/groebner.hpp"
#include "hilbdiag/parallel.hpp"
#include "hilbdiag/tangent.hpp"

namespace hilbdiag {

namespace h33_detail {

// A cell of the triangle is its vertex set, a 3-bit mask.
constexpr std::array<std::uint8_t, 3> vertices{1, 2, 4};
constexpr std::array<std::uint8_t, 3> edges{3, 5, 6};
constexpr std::uint8_t face = 7;

// Product vertex (v1, v2, v3), each in 0..2, has index 9 v1 + 3 v2 + v3.
inline std::uint32_t vertex_mask(const std::array<std::uint8_t, 3>& cell) {
  std::uint32_t m = 0;
  for (int a : bits_of(cell[0]))
    for (int b : bits_of(cell[1]))
      for (int c : bits_of(cell[2])) m |= std::uint32_t{1} << (9 * a + 3 * b + c);
  return m;
}

// A product edge has one factor an edge of the triangle and the others
// vertices: index 27 k + 9 e + 3 p + q with k the edge factor, e the edge
// (0..2) and p, q the vertices of the other two factors in order.
inline unsigned __int128 edge_mask(const std::array<std::uint8_t, 3>& cell) {
  unsigned __int128 m = 0;
  for (int k = 0; k < 3; ++k)
    for (int e = 0; e < 3; ++e) {
      if ((cell[static_cast<size_t>(k)] & edges[static_cast<size_t>(e)]) != edges[static_cast<size_t>(e)]) continue;
      int o1 = (k + 1) % 3, o2 = (k + 2) % 3;
      if (o1 > o2) std::swap(o1, o2);
      for (int p : bits_of(cell[static_cast<size_t>(o1)]))
        for (int q : bits_of(cell[static_cast<size_t>(o2)])) m |= static_cast<unsigned __int128>(1) << (27 * k + 9 * e + 3 * p + q);
    }
  return m;
}

inline int popcount128(unsigned __int128 m) {
  return popcount(static_cast<std::uint64_t>(m)) + popcount(static_cast<std::uint64_t>(m >> 64));
}

}  // namespace h33_detail

/// Six 2-cells, one per type: cells[k] is the face of factor k times vertices
/// for k = 0, 1, 2, and cells[3 + k] is the square missing edge factor k
/// (an edge in both other factors, a vertex in factor k).
struct CellComplex233 {
  std::array<std::array<std::uint8_t, 3>, 6> cells{};
  std::uint64_t candidate = 0;

  int vertex_count() const {
    std::uint32_t m = 0;
    for (const auto& c : cells) m |= h33_detail::vertex_mask(c);
    return popcount(m);
  }

  int edge_count() const {
    unsigned __int128 m = 0;
    for (const auto& c : cells) m |= h33_detail::edge_mask(c);
    return h33_detail::popcount128(m);
  }

  /// Supports in the 3x3 grid: variable (row r, column j) is vertex r of
  /// factor j.
  std::vector<std::uint64_t> facet_masks() const {
    Shape s{3, 3};
    std::vector<std::uint64_t> out;
    for (const auto& c : cells) {
      std::uint64_t m = 0;
      for (int j = 0; j < 3; ++j)
        for (int r : bits_of(c[static_cast<size_t>(j)])) m |= std::uint64_t{1} << s.index(r + 1, j + 1);
      out.push_back(m);
    }
    return out;
  }

  /// No product edge lies in more than two 2-cells.
  bool planar() const {
    std::map<int, int> uses;
    for (const auto& c : cells) {
      auto m = h33_detail::edge_mask(c);
      for (int b = 0; b < 81; ++b)
        if ((m >> b) & 1) ++uses[b];
    }
    return std::all_of(uses.begin(), uses.end(), [](const auto& kv) { return kv.second <= 2; });
  }

  /// The three squares have a common vertex.
  bool squares_meet() const {
    return (h33_detail::vertex_mask(cells[3]) & h33_detail::vertex_mask(cells[4]) & h33_detail::vertex_mask(cells[5])) != 0;
  }
};

inline MonomialIdeal complex_to_ideal(const CellComplex233& C) {
  return ideal_of_complex(complex_from_facets(Shape{3, 3}, C.facet_masks()));
}

inline constexpr std::uint64_t h33_candidate_count = 9ull * 9 * 9 * 27 * 27 * 27;

/// Scans every choice of one cell per type and keeps those whose closure has
/// ten vertices and fifteen edges. Results are ordered by candidate index.
inline std::vector<CellComplex233> enumerate_h33() {
  using namespace h33_detail;
  // choices per type, with their vertex and edge masks
  struct Choice {
    std::array<std::uint8_t, 3> cell;
    std::uint32_t vmask;
    unsigned __int128 emask;
  };
  std::array<std::vector<Choice>, 6> choices;
  for (int k = 0; k < 3; ++k)
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) {
        std::array<std::uint8_t, 3> c{};
        c[static_cast<size_t>(k)] = face;
        c[static_cast<size_t>((k + 1) % 3)] = vertices[static_cast<size_t>(p)];
        c[static_cast<size_t>((k + 2) % 3)] = vertices[static_cast<size_t>(q)];
        choices[static_cast<size_t>(k)].push_back({c, vertex_mask(c), edge_mask(c)});
      }
  for (int k = 0; k < 3; ++k)
    for (int e1 = 0; e1 < 3; ++e1)
      for (int e2 = 0; e2 < 3; ++e2)
        for (int p = 0; p < 3; ++p) {
          std::array<std::uint8_t, 3> c{};
          c[static_cast<size_t>(k)] = vertices[static_cast<size_t>(p)];
          c[static_cast<size_t>((k + 1) % 3)] = edges[static_cast<size_t>(e1)];
          c[static_cast<size_t>((k + 2) % 3)] = edges[static_cast<size_t>(e2)];
          choices[static_cast<size_t>(3 + k)].push_back({c, vertex_mask(c), edge_mask(c)});
        }

  std::vector<std::vector<CellComplex233>> found(729);
  parallel_for(729, [&](size_t outer) {
    const auto& t0 = choices[0][outer / 81];
    const auto& t1 = choices[1][(outer / 9) % 9];
    const auto& t2 = choices[2][outer % 9];
    std::uint32_t v3 = t0.vmask | t1.vmask | t2.vmask;
    unsigned __int128 e3 = t0.emask | t1.emask | t2.emask;
    for (size_t a = 0; a < 27; ++a) {
      const auto& s0 = choices[3][a];
      std::uint32_t v4 = v3 | s0.vmask;
      if (popcount(v4) > 10) continue;
      for (size_t b = 0; b < 27; ++b) {
        const auto& s1 = choices[4][b];
        std::uint32_t v5 = v4 | s1.vmask;
        if (popcount(v5) > 10) continue;
        for (size_t c = 0; c < 27; ++c) {
          const auto& s2 = choices[5][c];
          if (popcount(v5 | s2.vmask) != 10) continue;
          if (popcount128(e3 | s0.emask | s1.emask | s2.emask) != 15) continue;
          CellComplex233 C;
          C.cells = {t0.cell, t1.cell, t2.cell, s0.cell, s1.cell, s2.cell};
          C.candidate = static_cast<std::uint64_t>(outer) * 19683 + a * 729 + b * 27 + c;
          found[outer].push_back(C);
        }
      }
    }
  });
  std::vector<CellComplex233> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  return out;
}

/// A column permutation together with a row permutation in each column. The
/// variable (r, j) goes to (rows[j][r], cols[j]) (all 0-based).
struct SymmetryGroupElement {
  std::array<std::uint8_t, 3> cols{};
  std::array<std::array<std::uint8_t, 3>, 3> rows{};

  std::uint64_t apply(std::uint64_t mask) const {
    Shape s{3, 3};
    std::uint64_t out = 0;
    for (int v : bits_of(mask)) {
      int r = s.row_of(v) - 1, j = s.col_of(v) - 1;
      out |= std::uint64_t{1} << s.index(rows[static_cast<size_t>(j)][static_cast<size_t>(r)] + 1, cols[static_cast<size_t>(j)] + 1);
    }
    return out;
  }
};

inline std::vector<SymmetryGroupElement> h33_symmetry_group() {
  std::vector<std::array<std::uint8_t, 3>> perms;
  std::array<std::uint8_t, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<SymmetryGroupElement> group;
  for (const auto& c : perms)
    for (const auto& r0 : perms)
      for (const auto& r1 : perms)
        for (const auto& r2 : perms) group.push_back({c, {r0, r1, r2}});
  return group;
}

/// Identifies a squarefree ideal by the sorted supports of its facets.
using FacetKey = std::vector<std::uint64_t>;

inline FacetKey facet_key(std::vector<std::uint64_t> facets) {
  std::sort(facets.begin(), facets.end());
  return facets;
}

inline FacetKey transform(const FacetKey& k, const SymmetryGroupElement& g) {
  FacetKey out;
  for (auto m : k) out.push_back(g.apply(m));
  return facet_key(std::move(out));
}

struct SymmetryClass {
  size_t representative = 0;  // index into the enumeration
  std::vector<size_t> members;
  size_t stabilizer = 0;
  size_t orbit() const { return members.size(); }
};

struct ClassReport {
  std::vector<SymmetryClass> classes;
  bool closed = true;  // every group image of an enumerated complex is enumerated
};

/// Orbits of the group on the enumerated complexes. The representative of a
/// class is its first member in enumeration order.
inline ClassReport symmetry_classes(const std::vector<CellComplex233>& all) {
  auto group = h33_symmetry_group();
  std::map<FacetKey, size_t> index;
  for (size_t k = 0; k < all.size(); ++k) index[facet_key(all[k].facet_masks())] = k;
  ClassReport rep;
  std::vector<long> cls(all.size(), -1);
  for (size_t k = 0; k < all.size(); ++k) {
    if (cls[k] >= 0) continue;
    SymmetryClass c;
    c.representative = k;
    auto key = facet_key(all[k].facet_masks());
    std::set<size_t> orbit;
    for (const auto& g : group) {
      auto image = transform(key, g);
      if (image == key) ++c.stabilizer;
      auto it = index.find(image);
      if (it == index.end()) {
        rep.closed = false;
        continue;
      }
      orbit.insert(it->second);
    }
    for (size_t m : orbit) cls[m] = static_cast<long>(rep.classes.size());
    c.members.assign(orbit.begin(), orbit.end());
    rep.classes.push_back(std::move(c));
  }
  return rep;
}

struct Table1Row {
  int tangent = 0;
  bool planar = false;
  int symm = 0;
  auto operator<=>(const Table1Row&) const = default;
};

/// The printed table, in its row order.
inline std::vector<Table1Row> printed_class_table() {
  return {{16, true, 2},  {16, true, 1},  {16, true, 1},  {18, true, 6},  {16, true, 3},  {14, true, 2},
          {15, true, 1},  {16, false, 1}, {17, false, 1}, {18, false, 2}, {17, false, 1}, {14, false, 2},
          {18, false, 2}, {18, false, 2}, {18, false, 1}, {18, false, 6}};
}

struct Table1Entry {
  size_t class_index = 0;
  Table1Row row;
  size_t orbit = 0;
  MonomialIdeal ideal;
};

struct Table1Report {
  std::vector<Table1Entry> entries;  // sorted: planar first, then tangent, symmetry, ideal
  bool matches = false;              // multiset equality with the printed table
  std::string mismatch;
};

inline Table1Report table1_report(const std::vector<CellComplex233>& all, const ClassReport& cr) {
  Table1Report rep;
  std::vector<Table1Entry> entries(cr.classes.size());
  parallel_for(cr.classes.size(), [&](size_t k) {
    const auto& c = cr.classes[k];
    const auto& C = all[c.representative];
    auto I = complex_to_ideal(C);
    entries[k] = {k, {static_cast<int>(tangent_dimension(I)), C.planar(), static_cast<int>(c.stabilizer)}, c.orbit(), I};
  });
  std::sort(entries.begin(), entries.end(), [](const Table1Entry& a, const Table1Entry& b) {
    auto ka = std::tuple{!a.row.planar, a.row.tangent, a.row.symm};
    auto kb = std::tuple{!b.row.planar, b.row.tangent, b.row.symm};
    if (ka != kb) return ka < kb;
    return a.ideal.gens() < b.ideal.gens();
  });
  rep.entries = std::move(entries);
  std::multiset<Table1Row> got, want;
  for (const auto& e : rep.entries) got.insert(e.row);
  for (const auto& r : printed_class_table()) want.insert(r);
  rep.matches = got == want;
  if (!rep.matches) {
    for (const auto& e : rep.entries)
      if (got.count(e.row) != want.count(e.row)) {
        rep.mismatch = "class with (tangent " + std::to_string(e.row.tangent) + ", " + (e.row.planar ? "planar" : "non-planar") +
                       ", symmetry " + std::to_string(e.row.symm) + ") has no matching row; representative " + e.ideal.to_string();
        break;
      }
    if (rep.mismatch.empty()) rep.mismatch = "row counts differ";
  }
  return rep;
}

/// x_i, y_i, z_i are the three variables of column i.
struct H33Vars {
  Shape s{3, 3};
  RatPoly x(int i) const { return RatPoly::grid_var(s, 0, 1, i); }
  RatPoly y(int i) const { return RatPoly::grid_var(s, 0, 2, i); }
  RatPoly z(int i) const { return RatPoly::grid_var(s, 0, 3, i); }
};

/// The representative of a 14-dimensional component.
inline std::vector<RatPoly> h33_ideal_14() {
  H33Vars v;
  return intersect_all({{v.x(1), v.x(2), v.y(1) * v.z(2) - v.z(1) * v.y(2), v.y(1) * v.y(3) - v.z(1) * v.x(3),
                         v.y(2) * v.y(3) - v.z(2) * v.x(3)},
                        {v.x(1), v.y(1), v.x(3), v.y(3)},
                        {v.x(1), v.x(2), v.x(3), v.y(3)},
                        {v.x(2), v.y(2), v.x(3), v.y(3)}});
}

/// The three linear primes of the 13-dimensional representative together
/// with <x1, x2, x3, a y1y2z3 + b y1y2y3 + c y1z2y3 + d z1z2y3>.
inline std::vector<RatPoly> h33_cubic_family(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  H33Vars v;
  auto cubic = v.y(1) * v.y(2) * v.z(3) * a + v.y(1) * v.y(2) * v.y(3) * b + v.y(1) * v.z(2) * v.y(3) * c +
               v.z(1) * v.z(2) * v.y(3) * d;
  return intersect_all({{v.x(1), v.y(1), v.x(2), v.z(2)},
                        {v.x(1), v.y(1), v.x(3), v.y(3)},
                        {v.x(2), v.y(2), v.x(3), v.y(3)},
                        {v.x(1), v.x(2), v.x(3), cubic}});
}

/// The representative of a 13-dimensional component (cubic y1y2z3 - z1z2y3).
inline std::vector<RatPoly> h33_ideal_13() { return h33_cubic_family(1, 0, 0, -1); }

struct RepCheck {
  std::string name;
  std::optional<Multidegree> first_mismatch;
  bool ok() const { return !first_mismatch; }
};

inline std::vector<RepCheck> component_rep_checks(int bound = 4) {
  std::vector<std::pair<std::string, std::vector<RatPoly>>> ideals;
  ideals.push_back({"14-dimensional representative", h33_ideal_14()});
  ideals.push_back({"13-dimensional representative", h33_ideal_13()});
  ideals.push_back({"cubic family (a,b,c,d) = (1,0,0,1)", h33_cubic_family(1, 0, 0, 1)});
  ideals.push_back({"cubic family (a,b,c,d) = (2,3,-1,5)", h33_cubic_family(2, 3, -1, 5)});
  ideals.push_back({"cubic family (a,b,c,d) = (1,1,1,1)", h33_cubic_family(1, 1, 1, 1)});
  std::vector<RepCheck> out(ideals.size());
  parallel_for(ideals.size(), [&](size_t k) { out[k] = {ideals[k].first, first_hf_mismatch(ideals[k].second, bound)}; });
  return out;
}

}  // namespace hilbdiag
