#pragma once

// Trees of projective lines in (P^1)^n and their ideals. A component carries
// a block of factors with one 2x2 matrix per factor; it is the image of P^1
// where the point with parameter p sits at A_i^{-1} p in factor i, so its
// prime is generated by the minors of the columns A_i (x_i, y_i)^T.
// Components meet at junctions; each incidence records the parameter of the
// common point on that component.

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hilbdiag/groebner.hpp"
#include "hilbdiag/linalg.hpp"
#include "hilbdiag/trees.hpp"

namespace hilbdiag {

using ProjectivePoint = std::array<Rational, 2>;

struct DecoratedComponent {
  std::vector<int> labels;          // factors 1..n
  std::vector<RatMatrix> matrices;  // 2x2, parallel to labels
};

struct Attachment {
  size_t component = 0;
  ProjectivePoint point;
};

struct Junction {
  std::vector<Attachment> members;
};

struct DecoratedTree {
  int n = 0;
  std::vector<DecoratedComponent> components;
  std::vector<Junction> junctions;

  /// Component that contains factor i.
  size_t owner(int i) const {
    for (size_t c = 0; c < components.size(); ++c)
      for (int l : components[c].labels)
        if (l == i) return c;
    throw Error("factor " + std::to_string(i) + " belongs to no component");
  }

  const RatMatrix& matrix_of(int i) const {
    const auto& comp = components[owner(i)];
    for (size_t k = 0; k < comp.labels.size(); ++k)
      if (comp.labels[k] == i) return comp.matrices[k];
    throw Error("unreachable");
  }

  void validate() const {
    if (n < 1) throw Error("decorated tree needs n >= 1");
    if (components.empty()) throw Error("decorated tree has no components");
    std::vector<int> seen(static_cast<size_t>(n + 1), 0);
    for (const auto& comp : components) {
      if (comp.labels.empty()) throw Error("component with no factors");
      if (comp.labels.size() != comp.matrices.size()) throw Error("component needs one matrix per factor");
      for (size_t k = 0; k < comp.labels.size(); ++k) {
        int l = comp.labels[k];
        if (l < 1 || l > n) throw Error("factor label out of range");
        if (seen[static_cast<size_t>(l)]++) throw Error("factor " + std::to_string(l) + " appears in two components");
        const auto& m = comp.matrices[k];
        if (m.size() != 2 || m[0].size() != 2 || m[1].size() != 2) throw Error("decoration matrices must be 2x2");
        if (determinant(m) == 0) throw Error("decoration matrix for factor " + std::to_string(l) + " is singular");
      }
    }
    for (int l = 1; l <= n; ++l)
      if (!seen[static_cast<size_t>(l)]) throw Error("factor " + std::to_string(l) + " belongs to no component");
    size_t incidences = 0;
    std::vector<std::vector<ProjectivePoint>> points(components.size());
    for (const auto& J : junctions) {
      if (J.members.size() < 2) throw Error("a junction joins at least two components");
      std::set<size_t> comps;
      for (const auto& a : J.members) {
        if (a.component >= components.size()) throw Error("junction refers to a missing component");
        if (!comps.insert(a.component).second) throw Error("junction lists a component twice");
        if (a.point[0] == 0 && a.point[1] == 0) throw Error("attachment point (0:0) is not a point");
        for (const auto& q : points[a.component])
          if (q[0] * a.point[1] == q[1] * a.point[0])
            throw Error("two junctions at the same point of a component");
        points[a.component].push_back(a.point);
      }
      incidences += J.members.size();
    }
    // the bipartite incidence graph must be a tree
    if (components.size() + junctions.size() != incidences + 1) throw Error("components and junctions do not form a tree");
    std::vector<size_t> parent(components.size() + junctions.size());
    for (size_t k = 0; k < parent.size(); ++k) parent[k] = k;
    auto find = [&](size_t v) {
      while (parent[v] != v) v = parent[v];
      return v;
    };
    for (size_t j = 0; j < junctions.size(); ++j)
      for (const auto& a : junctions[j].members) parent[find(components.size() + j)] = find(a.component);
    for (size_t k = 1; k < parent.size(); ++k)
      if (find(k) != find(0)) throw Error("components and junctions do not form a tree");
  }

  /// Torus-fixed decoration of a directed edge tree: one line per edge with
  /// the identity matrix, the tail at V(x_i) = (0:1) and the head at
  /// V(y_i) = (1:0), and one junction per non-leaf vertex.
  static DecoratedTree from_tree(const DirectedEdgeTree& T) {
    T.validate();
    DecoratedTree D{T.n, {}, {}};
    for (int i = 1; i <= T.n; ++i) D.components.push_back({{i}, {identity_matrix(2)}});
    for (int v = 0; v <= T.n; ++v) {
      Junction J;
      for (int i : T.incident(v))
        J.members.push_back({static_cast<size_t>(i - 1), T.tail(i) == v ? ProjectivePoint{0, 1} : ProjectivePoint{1, 0}});
      if (J.members.size() >= 2) D.junctions.push_back(std::move(J));
    }
    return D;
  }
};

/// Sum_k m[row][k] * x_{k+1, col} for a 2x2 matrix.
inline RatPoly transformed_coordinate(Shape s, const RatMatrix& m, int row, int col) {
  return RatPoly::grid_var(s, 0, 1, col) * m[static_cast<size_t>(row)][0] +
         RatPoly::grid_var(s, 0, 2, col) * m[static_cast<size_t>(row)][1];
}

/// Linear form of multidegree e_i vanishing at the point of factor i with
/// parameter p on its component.
inline RatPoly point_form(Shape s, const RatMatrix& m, int i, const ProjectivePoint& p) {
  return transformed_coordinate(s, m, 0, i) * p[1] - transformed_coordinate(s, m, 1, i) * p[0];
}

/// Prime ideals of the components, in component order.
inline std::vector<std::vector<RatPoly>> component_ideals(const DecoratedTree& D) {
  D.validate();
  Shape s{2, D.n};
  size_t C = D.components.size();
  // adjacency in the bipartite tree: nodes 0..C-1 components, then junctions
  std::vector<std::vector<size_t>> adj(C + D.junctions.size());
  for (size_t j = 0; j < D.junctions.size(); ++j)
    for (const auto& a : D.junctions[j].members) adj[C + j].push_back(a.component), adj[a.component].push_back(C + j);
  std::vector<std::vector<RatPoly>> out;
  for (size_t c = 0; c < C; ++c) {
    std::vector<RatPoly> gens;
    const auto& comp = D.components[c];
    for (size_t a = 0; a < comp.labels.size(); ++a)
      for (size_t b = a + 1; b < comp.labels.size(); ++b) {
        int i = comp.labels[a], j = comp.labels[b];
        gens.push_back(transformed_coordinate(s, comp.matrices[a], 0, i) * transformed_coordinate(s, comp.matrices[b], 1, j) -
                       transformed_coordinate(s, comp.matrices[a], 1, i) * transformed_coordinate(s, comp.matrices[b], 0, j));
      }
    // search outward from c; the junction through which another component
    // is first reached is its nearest intersection point
    std::vector<long> via(adj.size(), -1);
    std::vector<bool> seen(adj.size(), false);
    std::vector<size_t> stack{c};
    seen[c] = true;
    while (!stack.empty()) {
      size_t v = stack.back();
      stack.pop_back();
      for (size_t w : adj[v]) {
        if (seen[w]) continue;
        seen[w] = true;
        if (w < C) via[w] = static_cast<long>(v - C);
        stack.push_back(w);
      }
    }
    for (int i = 1; i <= D.n; ++i) {
      size_t o = D.owner(i);
      if (o == c) continue;
      const auto& J = D.junctions[static_cast<size_t>(via[o])];
      for (const auto& a : J.members)
        if (a.component == o) gens.push_back(point_form(s, D.matrix_of(i), i, a.point));
    }
    out.push_back(std::move(gens));
  }
  return out;
}

/// Reduced Groebner basis (degree lex) of the intersection of the component
/// primes.
inline std::vector<RatPoly> decorated_tree_ideal(const DecoratedTree& D) {
  auto primes = component_ideals(D);
  auto I = intersect_all(primes);
  return buchberger(I, TermOrder::deglex(2 * D.n));
}

/// Four lines attached at their points V(x_j) to a fifth line, at the points
/// (0:1), (1:1), (1:0), (t:1) of the fifth line.
inline DecoratedTree cross_ratio_tree(const Rational& t) {
  if (t == 0 || t == 1)
    throw Error("cross-ratio family needs four distinct points on the fifth line: t = " + t.get_str() +
                " makes (t:1) coincide with " + (t == 0 ? "(0:1)" : "(1:1)"));
  DecoratedTree D{5, {}, {}};
  for (int i = 1; i <= 5; ++i) D.components.push_back({{i}, {identity_matrix(2)}});
  std::array<ProjectivePoint, 4> on_fifth{ProjectivePoint{0, 1}, {1, 1}, {1, 0}, {t, 1}};
  for (size_t k = 0; k < 4; ++k) D.junctions.push_back({{{k, {0, 1}}, {4, on_fifth[k]}}});
  return D;
}

inline std::vector<RatPoly> cross_ratio_family(const Rational& t) { return decorated_tree_ideal(cross_ratio_tree(t)); }

}  // namespace hilbdiag
