#pragma once

// Monomial ideals of H(2,n) as trees with n labeled directed edges: the
// pairwise z-table, the bijection with ideals, the tangent formula and the
// graph of moves between trees.

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hilbdiag/grid.hpp"
#include "hilbdiag/parallel.hpp"

namespace hilbdiag {

/// Edge i (1-based) runs from edges[i-1].first (tail) to edges[i-1].second
/// (head). Vertices are 0..n and carry no identity.
struct DirectedEdgeTree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  int tail(int i) const { return edges[static_cast<size_t>(i - 1)].first; }
  int head(int i) const { return edges[static_cast<size_t>(i - 1)].second; }

  std::vector<int> degrees() const {
    std::vector<int> deg(static_cast<size_t>(n + 1), 0);
    for (auto [a, b] : edges) ++deg[static_cast<size_t>(a)], ++deg[static_cast<size_t>(b)];
    return deg;
  }

  /// Labels of the edges incident to v.
  std::vector<int> incident(int v) const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
      if (tail(i) == v || head(i) == v) out.push_back(i);
    return out;
  }

  void validate() const {
    if (n < 1) throw Error("tree needs at least one edge");
    if (edges.size() != static_cast<size_t>(n)) throw Error("tree must have exactly n edges");
    std::vector<int> parent(static_cast<size_t>(n + 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[static_cast<size_t>(v)] != v) v = parent[static_cast<size_t>(v)];
      return v;
    };
    for (auto [a, b] : edges) {
      if (a < 0 || a > n || b < 0 || b > n) throw Error("tree vertex out of range");
      int ra = find(a), rb = find(b);
      if (ra == rb) throw Error("edges do not form a tree");
      parent[static_cast<size_t>(ra)] = rb;
    }
  }

  std::string to_string() const {
    std::string s;
    for (int i = 1; i <= n; ++i)
      s += (i > 1 ? " " : "") + std::to_string(i) + ":" + std::to_string(tail(i)) + "->" + std::to_string(head(i));
    return s;
  }
};

/// z(i, j) for i != j is true for x_j and false for y_j: x_j exactly when
/// edge i lies on the tail side of edge j. Stored as bits (i-1)*n + (j-1).
class ZTable {
 public:
  static constexpr int max_edges = 8;

  ZTable() = default;
  explicit ZTable(int n) : n_(n) {
    if (n < 1 || n > max_edges) throw Error("trees are supported for 1 <= n <= 8");
  }

  int n() const { return n_; }
  bool is_x(int i, int j) const { return (bits_ >> bit(i, j)) & 1; }
  void set(int i, int j, bool x) {
    if (x)
      bits_ |= std::uint64_t{1} << bit(i, j);
    else
      bits_ &= ~(std::uint64_t{1} << bit(i, j));
  }
  void flip(int i, int j) { bits_ ^= std::uint64_t{1} << bit(i, j); }
  std::uint64_t key() const { return bits_; }

  bool operator==(const ZTable&) const = default;
  auto operator<=>(const ZTable& o) const { return std::pair{n_, bits_} <=> std::pair{o.n_, o.bits_}; }

 private:
  int bit(int i, int j) const { return (i - 1) * n_ + (j - 1); }
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

inline ZTable ztable(const DirectedEdgeTree& T) {
  ZTable z(T.n);
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(T.n + 1));
  for (int i = 1; i <= T.n; ++i) {
    adj[static_cast<size_t>(T.tail(i))].push_back({T.head(i), i});
    adj[static_cast<size_t>(T.head(i))].push_back({T.tail(i), i});
  }
  for (int j = 1; j <= T.n; ++j) {
    // vertices reachable from the tail of j without crossing j
    std::vector<bool> seen(static_cast<size_t>(T.n + 1), false);
    std::vector<int> stack{T.tail(j)};
    seen[static_cast<size_t>(T.tail(j))] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, e] : adj[static_cast<size_t>(v)])
        if (e != j && !seen[static_cast<size_t>(w)]) seen[static_cast<size_t>(w)] = true, stack.push_back(w);
    }
    for (int i = 1; i <= T.n; ++i)
      if (i != j) z.set(i, j, seen[static_cast<size_t>(T.tail(i))]);
  }
  return z;
}

/// The tree realizing a z-table, if any. Edges i and j share a vertex when
/// no third edge separates them; the shared vertex is the end of each that
/// faces the other.
inline std::optional<DirectedEdgeTree> tree_from_ztable(const ZTable& z) {
  int n = z.n();
  // endpoint slots: 2(i-1) is the tail of i, 2(i-1)+1 its head
  std::vector<int> parent(static_cast<size_t>(2 * n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<size_t>(v)] != v) v = parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
    return v;
  };
  auto facing = [&](int from, int to) { return 2 * (to - 1) + (z.is_x(from, to) ? 0 : 1); };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      bool separated = false;
      for (int k = 1; k <= n && !separated; ++k)
        if (k != i && k != j && z.is_x(i, k) != z.is_x(j, k)) separated = true;
      if (!separated) parent[static_cast<size_t>(find(facing(i, j)))] = find(facing(j, i));
    }
  std::map<int, int> vertex;
  for (int s = 0; s < 2 * n; ++s) vertex.try_emplace(find(s), static_cast<int>(vertex.size()));
  if (vertex.size() != static_cast<size_t>(n + 1)) return std::nullopt;
  DirectedEdgeTree T{n, {}};
  for (int i = 1; i <= n; ++i) T.edges.push_back({vertex[find(2 * (i - 1))], vertex[find(2 * (i - 1) + 1)]});
  try {
    T.validate();
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!(ztable(T) == z)) return std::nullopt;
  return T;
}

/// Relabels vertices in order of first appearance along the edge list, so
/// isomorphic trees become identical.
inline DirectedEdgeTree normalized(const DirectedEdgeTree& T) {
  auto z = tree_from_ztable(ztable(T));
  return *z;
}

/// <z_ij z_ji : i < j> with x_j = x_{1j} and y_j = x_{2j}.
inline MonomialIdeal tree_to_ideal(const DirectedEdgeTree& T) {
  T.validate();
  Shape s{2, T.n};
  auto z = ztable(T);
  std::vector<Monomial> gens;
  for (int i = 1; i <= T.n; ++i)
    for (int j = i + 1; j <= T.n; ++j)
      gens.push_back(Monomial::of(s, {{z.is_x(i, j) ? 1 : 2, j}, {z.is_x(j, i) ? 1 : 2, i}}));
  return MonomialIdeal(s, std::move(gens));
}

inline ZTable ztable_of_ideal(const MonomialIdeal& I) {
  Shape s = I.shape();
  if (s.d != 2) throw Error("not a tree ideal: the grid must have two rows");
  int n = s.n;
  if (static_cast<int>(I.size()) != n * (n - 1) / 2)
    throw Error("not a tree ideal: expected " + std::to_string(n * (n - 1) / 2) + " generators");
  ZTable z(n);
  std::set<std::pair<int, int>> seen;
  for (const auto& g : I.gens()) {
    if (!g.is_squarefree() || g.degree() != 2) throw Error("not a tree ideal: " + g.to_string() + " is not a squarefree quadric");
    std::vector<GridVar> vars;
    for (int v = 0; v < s.nvars(); ++v)
      if (g.exponent(v)) vars.push_back({s.row_of(v), s.col_of(v)});
    if (vars[0].col == vars[1].col) throw Error("not a tree ideal: " + g.to_string() + " lives in one column");
    if (vars[0].col > vars[1].col) std::swap(vars[0], vars[1]);
    int i = vars[0].col, j = vars[1].col;
    if (!seen.insert({i, j}).second) throw Error("not a tree ideal: two generators for columns " + std::to_string(i) + "," + std::to_string(j));
    z.set(i, j, vars[1].row == 1);
    z.set(j, i, vars[0].row == 1);
  }
  return z;
}

inline DirectedEdgeTree ideal_to_tree(const MonomialIdeal& I) {
  auto T = tree_from_ztable(ztable_of_ideal(I));
  if (!T) throw Error("not a tree ideal: the pattern of x and y is not realized by a tree");
  return *T;
}

/// Vertex-labeled tree on 0..n from a Pruefer sequence of length n-1.
inline std::vector<std::pair<int, int>> pruefer_decode(const std::vector<int>& code, int vertices) {
  std::vector<int> degree(static_cast<size_t>(vertices), 1);
  for (int c : code) ++degree[static_cast<size_t>(c)];
  std::vector<std::pair<int, int>> out;
  for (int c : code) {
    for (int v = 0; v < vertices; ++v)
      if (degree[static_cast<size_t>(v)] == 1) {
        out.push_back({v, c});
        --degree[static_cast<size_t>(v)];
        --degree[static_cast<size_t>(c)];
        break;
      }
  }
  int u = -1, w = -1;
  for (int v = 0; v < vertices; ++v)
    if (degree[static_cast<size_t>(v)] == 1) (u < 0 ? u : w) = v;
  out.push_back({u, w});
  return out;
}

/// All trees with n labeled directed edges, one per z-table, sorted by key.
/// Each vertex-labeled tree on 0..n is rooted at 0 and vertex v gives its
/// label to the edge towards its parent; every orientation is then tried.
inline std::vector<DirectedEdgeTree> enumerate_trees(int n) {
  if (n < 1 || n > ZTable::max_edges) throw Error("trees are supported for 1 <= n <= 8");
  size_t codes = 1;
  for (int k = 0; k < n - 1; ++k) codes *= static_cast<size_t>(n + 1);
  std::map<std::uint64_t, DirectedEdgeTree> all;
  std::mutex mutex;
  size_t chunk = std::max<size_t>(1, codes / 64);
  size_t tasks = (codes + chunk - 1) / chunk;
  parallel_for(tasks, [&](size_t task) {
    std::map<std::uint64_t, DirectedEdgeTree> local;
    for (size_t c = task * chunk; c < std::min(codes, (task + 1) * chunk); ++c) {
      std::vector<int> code;
      for (size_t r = c, k = 0; k + 1 < static_cast<size_t>(n); ++k, r /= static_cast<size_t>(n + 1))
        code.push_back(static_cast<int>(r % static_cast<size_t>(n + 1)));
      auto vedges = pruefer_decode(code, n + 1);
      std::vector<std::vector<int>> adj(static_cast<size_t>(n + 1));
      for (auto [a, b] : vedges) adj[static_cast<size_t>(a)].push_back(b), adj[static_cast<size_t>(b)].push_back(a);
      std::vector<int> par(static_cast<size_t>(n + 1), -1);
      std::vector<int> stack{0};
      par[0] = 0;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<size_t>(v)])
          if (par[static_cast<size_t>(w)] < 0) par[static_cast<size_t>(w)] = v, stack.push_back(w);
      }
      for (std::uint64_t orient = 0; orient < (std::uint64_t{1} << n); ++orient) {
        DirectedEdgeTree T{n, {}};
        for (int v = 1; v <= n; ++v) {
          int p = par[static_cast<size_t>(v)];
          T.edges.push_back((orient >> (v - 1)) & 1 ? std::pair{v, p} : std::pair{p, v});
        }
        local.try_emplace(ztable(T).key(), T);
      }
    }
    std::lock_guard lock(mutex);
    all.merge(local);
  });
  std::vector<DirectedEdgeTree> out;
  for (auto& [k, T] : all) out.push_back(normalized(T));
  return out;
}

/// Independent count: the number of realizable z-tables among all 2^(n(n-1)).
inline size_t count_realizable_ztables(int n) {
  if (n < 1 || n > 5) throw Error("brute-force tree count is limited to n <= 5");
  int bits = n * (n - 1);
  size_t count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m) {
    ZTable z(n);
    int b = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) z.set(i, j, (m >> b++) & 1);
    count += tree_from_ztable(z).has_value();
  }
  return count;
}

/// 2^n (n+1)^(n-2), defined for n >= 1.
inline Integer tree_count_formula(int n) {
  Integer r = 1;
  for (int k = 0; k < n; ++k) r *= 2;
  if (n >= 2) {
    for (int k = 0; k < n - 2; ++k) r *= n + 1;
  } else {
    r /= 2;
  }
  return r;
}

inline int tangent_weight(int a) { return a <= 3 ? 3 * (a - 1) : a * (a - 1); }

/// Sum over vertices of f(degree).
inline int tree_tangent_dim(const DirectedEdgeTree& T) {
  int s = 0;
  for (int deg : T.degrees()) s += deg > 0 ? tangent_weight(deg) : 0;
  return s;
}

inline bool is_smooth(const DirectedEdgeTree& T) {
  auto deg = T.degrees();
  return *std::max_element(deg.begin(), deg.end()) <= 3;
}

struct MoveEdge {
  size_t a = 0;
  size_t b = 0;
  bool move1 = false;  // subtrees moved to an adjacent vertex
  bool move2 = false;  // two edges swapped at a bivalent vertex
};

struct MovesGraph {
  int n = 0;
  std::vector<DirectedEdgeTree> trees;
  std::vector<MoveEdge> edges;

  size_t count(bool swap) const {
    return static_cast<size_t>(std::count_if(edges.begin(), edges.end(), [&](const MoveEdge& e) {
      return swap ? e.move2 : e.move1;
    }));
  }

  size_t degree(size_t v) const {
    return static_cast<size_t>(std::count_if(edges.begin(), edges.end(), [&](const MoveEdge& e) {
      return e.a == v || e.b == v;
    }));
  }

  bool connected() const {
    if (trees.empty()) return true;
    std::vector<std::vector<size_t>> adj(trees.size());
    for (const auto& e : edges) adj[e.a].push_back(e.b), adj[e.b].push_back(e.a);
    std::vector<bool> seen(trees.size(), false);
    std::vector<size_t> stack{0};
    seen[0] = true;
    size_t reached = 1;
    while (!stack.empty()) {
      size_t v = stack.back();
      stack.pop_back();
      for (size_t w : adj[v])
        if (!seen[w]) seen[w] = true, ++reached, stack.push_back(w);
    }
    return reached == trees.size();
  }
};

/// Results of move 1 at T: for a vertex v, an incident edge e = (v, w) and
/// a nonempty set S of the other edges at v, the edges in S (with their
/// subtrees) are reattached at w.
inline std::vector<DirectedEdgeTree> move1_neighbors(const DirectedEdgeTree& T) {
  std::vector<DirectedEdgeTree> out;
  for (int v = 0; v <= T.n; ++v) {
    auto at = T.incident(v);
    for (int e : at) {
      int w = T.tail(e) == v ? T.head(e) : T.tail(e);
      std::vector<int> others;
      for (int b : at)
        if (b != e) others.push_back(b);
      for (std::uint64_t S = 1; S < (std::uint64_t{1} << others.size()); ++S) {
        DirectedEdgeTree U = T;
        for (size_t k = 0; k < others.size(); ++k) {
          if (!((S >> k) & 1)) continue;
          auto& ed = U.edges[static_cast<size_t>(others[k] - 1)];
          if (ed.first == v) ed.first = w;
          if (ed.second == v) ed.second = w;
        }
        out.push_back(U);
      }
    }
  }
  return out;
}

/// Results of move 2: at a bivalent vertex with edges k and l the two edges
/// trade places, each keeping its direction. Only z(k,l) and z(l,k) change.
inline std::vector<DirectedEdgeTree> move2_neighbors(const DirectedEdgeTree& T) {
  std::vector<DirectedEdgeTree> out;
  auto z = ztable(T);
  for (int v = 0; v <= T.n; ++v) {
    auto at = T.incident(v);
    if (at.size() != 2) continue;
    ZTable u = z;
    u.flip(at[0], at[1]);
    u.flip(at[1], at[0]);
    auto U = tree_from_ztable(u);
    if (!U) throw Error("edge swap produced an unrealizable table");
    out.push_back(*U);
  }
  return out;
}

inline MovesGraph moves_graph(int n) {
  MovesGraph g{n, enumerate_trees(n), {}};
  std::map<std::uint64_t, size_t> index;
  for (size_t k = 0; k < g.trees.size(); ++k) index[ztable(g.trees[k]).key()] = k;
  std::map<std::pair<size_t, size_t>, MoveEdge> found;
  auto record = [&](size_t a, const DirectedEdgeTree& U, bool swap) {
    size_t b = index.at(ztable(U).key());
    if (a == b) return;
    auto key = std::minmax(a, b);
    auto& e = found[{key.first, key.second}];
    e.a = key.first;
    e.b = key.second;
    (swap ? e.move2 : e.move1) = true;
  };
  for (size_t a = 0; a < g.trees.size(); ++a) {
    for (const auto& U : move1_neighbors(g.trees[a])) record(a, U, false);
    for (const auto& U : move2_neighbors(g.trees[a])) record(a, U, true);
  }
  for (auto& [k, e] : found) g.edges.push_back(e);
  return g;
}

}  // namespace hilbdiag
