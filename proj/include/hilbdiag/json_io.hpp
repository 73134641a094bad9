#pragma once

// Serialization: ideals and K-polynomials as JSON, matrix tuples with entries
// over z, polynomial lists, DOT graphs for trees and the moves graph, and the
// H(3,3) class table as CSV. Object keys come out sorted, so equal inputs
// give byte-identical output.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilbdiag/deligne.hpp"
#include "hilbdiag/h33.hpp"
#include "hilbdiag/tangent.hpp"
#include "hilbdiag/trees.hpp"

namespace hilbdiag {

using Json = nlohmann::json;

namespace json_detail {

[[noreturn]] inline void fail(const std::string& what, const std::string& where, const std::string& msg) {
  throw Error(what + ": at " + (where.empty() ? "/" : where) + ": " + msg);
}

inline int get_int(const Json& j, const std::string& what, const std::string& where) {
  if (!j.is_number_integer()) fail(what, where, "expected an integer, found " + std::string(j.type_name()));
  return j.get<int>();
}

inline const Json& member(const Json& j, const char* key, const std::string& what, const std::string& where) {
  if (!j.is_object()) fail(what, where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(what, where, std::string("missing key \"") + key + "\"");
  return *it;
}

inline Rational get_rational(const Json& j, const std::string& what, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(what, where, "expected an integer or a string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(what, where, e.what());
  }
}

}  // namespace json_detail

/// Parses text, turning syntax errors into Error with line and column.
inline Json parse_json_text(const std::string& text, const std::string& source = "input") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    size_t line = 1, col = 1;
    for (size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') ++line, col = 1;
      else ++col;
    }
    throw Error(source + ": JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) +
                " (byte " + std::to_string(e.byte) + ")");
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json read_json_file(const std::string& path) { return parse_json_text(read_file(path), path); }

/// Compact, with a trailing newline.
inline std::string dump(const Json& j) { return j.dump() + "\n"; }

// ---- Ideals ----

inline Json monomial_to_json(const Monomial& m) {
  Json out = Json::array();
  Shape s = m.shape();
  for (int idx = 0; idx < s.nvars(); ++idx)
    if (m.exponent(idx)) out.push_back({s.row_of(idx), s.col_of(idx), m.exponent(idx)});
  return out;
}

/// {"d":..,"n":..,"gens":[[[row,col,exp],...],...]} with generators in
/// canonical order and factors in row-major order.
inline Json ideal_to_json(const MonomialIdeal& I) {
  Json gens = Json::array();
  for (const auto& g : I.gens()) gens.push_back(monomial_to_json(g));
  return {{"d", I.shape().d}, {"n", I.shape().n}, {"gens", gens}};
}

inline MonomialIdeal ideal_from_json(const Json& j) {
  const std::string what = "ideal JSON";
  using json_detail::fail;
  int d = json_detail::get_int(json_detail::member(j, "d", what, ""), what, "/d");
  int n = json_detail::get_int(json_detail::member(j, "n", what, ""), what, "/n");
  if (d < 1 || n < 1) fail(what, "", "d and n must be positive");
  Shape s{d, n};
  if (s.nvars() > 64) fail(what, "", "grid has more than 64 variables");
  const Json& gens = json_detail::member(j, "gens", what, "");
  if (!gens.is_array()) fail(what, "/gens", "expected an array");
  std::vector<Monomial> ms;
  for (size_t g = 0; g < gens.size(); ++g) {
    std::string gp = "/gens/" + std::to_string(g);
    if (!gens[g].is_array()) fail(what, gp, "expected an array of [row,col,exp] triples");
    std::vector<int> e(static_cast<size_t>(s.nvars()), 0);
    for (size_t f = 0; f < gens[g].size(); ++f) {
      std::string fp = gp + "/" + std::to_string(f);
      const Json& t = gens[g][f];
      if (!t.is_array() || t.size() != 3) fail(what, fp, "expected [row,col,exp]");
      int r = json_detail::get_int(t[0], what, fp + "/0");
      int c = json_detail::get_int(t[1], what, fp + "/1");
      int x = json_detail::get_int(t[2], what, fp + "/2");
      if (r < 1 || r > d) fail(what, fp + "/0", "row " + std::to_string(r) + " out of range 1.." + std::to_string(d));
      if (c < 1 || c > n) fail(what, fp + "/1", "column " + std::to_string(c) + " out of range 1.." + std::to_string(n));
      if (x < 0) fail(what, fp + "/2", "negative exponent");
      e[static_cast<size_t>(s.index(r, c))] += x;
    }
    ms.emplace_back(s, std::move(e));
  }
  return MonomialIdeal(s, std::move(ms));
}

inline MonomialIdeal parse_ideal(const std::string& text, const std::string& source = "input") {
  return ideal_from_json(parse_json_text(text, source));
}

// ---- Polynomials ----

/// Integers that fit in a machine word become JSON numbers, others strings.
inline Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

/// [{"u":[..],"c":int},...] in ascending exponent order.
inline Json kpoly_to_json(const KPolynomial& K) {
  Json out = Json::array();
  for (const auto& [u, c] : K.terms()) out.push_back({{"u", u}, {"c", integer_to_json(c)}});
  return out;
}

inline Json int_poly_to_json(const IntPoly& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(integer_to_json(c));
  return out;
}

inline Json polys_to_json(const std::vector<RatPoly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

inline Json rational_to_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return r.get_str();
}

inline Json matrix_to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rational_to_json(v));
    out.push_back(std::move(r));
  }
  return out;
}

// ---- Matrix tuples ----

/// {"matrices":[M_1,...,M_n]} where each M_j is a list of rows and entries
/// are integers or strings over z such as "z^2-3/2*z". An optional
/// "weights" key holds a d x n integer matrix.
inline MatrixTuple matrices_from_json(const Json& j) {
  const std::string what = "matrices JSON";
  using json_detail::fail;
  const Json& ms = json_detail::member(j, "matrices", what, "");
  if (!ms.is_array() || ms.empty()) fail(what, "/matrices", "expected a nonempty array of matrices");
  MatrixTuple t{0, {}};
  for (size_t k = 0; k < ms.size(); ++k) {
    std::string mp = "/matrices/" + std::to_string(k);
    if (!ms[k].is_array() || ms[k].empty()) fail(what, mp, "expected a nonempty array of rows");
    if (k == 0) t.d = static_cast<int>(ms[k].size());
    if (ms[k].size() != static_cast<size_t>(t.d)) fail(what, mp, "expected " + std::to_string(t.d) + " rows");
    ZMatrix zm;
    for (size_t r = 0; r < ms[k].size(); ++r) {
      std::string rp = mp + "/" + std::to_string(r);
      const Json& row = ms[k][r];
      if (!row.is_array() || row.size() != static_cast<size_t>(t.d)) fail(what, rp, "expected " + std::to_string(t.d) + " entries");
      std::vector<ZPoly> zr;
      for (size_t c = 0; c < row.size(); ++c) {
        std::string ep = rp + "/" + std::to_string(c);
        const Json& e = row[c];
        if (e.is_number_integer()) {
          zr.push_back(zpoly_trim({Rational(e.get<long>())}));
        } else if (e.is_string()) {
          try {
            zr.push_back(parse_zpoly(e.get<std::string>()));
          } catch (const Error& err) {
            fail(what, ep, err.what());
          }
        } else {
          fail(what, ep, "expected an integer or a string");
        }
      }
      zm.push_back(std::move(zr));
    }
    t.mats.push_back(std::move(zm));
  }
  try {
    t.validate();
  } catch (const Error& e) {
    fail(what, "/matrices", e.what());
  }
  return t;
}

inline std::optional<std::vector<std::vector<int>>> weights_from_json(const Json& j, int d, int n) {
  if (!j.is_object() || !j.contains("weights")) return std::nullopt;
  const std::string what = "matrices JSON";
  const Json& w = j["weights"];
  if (!w.is_array() || w.size() != static_cast<size_t>(d)) json_detail::fail(what, "/weights", "expected d rows");
  std::vector<std::vector<int>> out;
  for (size_t r = 0; r < w.size(); ++r) {
    std::string rp = "/weights/" + std::to_string(r);
    if (!w[r].is_array() || w[r].size() != static_cast<size_t>(n)) json_detail::fail(what, rp, "expected n entries");
    std::vector<int> row;
    for (size_t c = 0; c < w[r].size(); ++c) row.push_back(json_detail::get_int(w[r][c], what, rp + "/" + std::to_string(c)));
    out.push_back(std::move(row));
  }
  return out;
}

/// The constant term of every entry; throws if an entry involves z.
inline std::vector<RatMatrix> constant_matrices(const MatrixTuple& t) {
  if (!t.is_constant()) throw Error("matrices must be constant (no z)");
  std::vector<RatMatrix> out;
  for (const auto& m : t.mats) {
    RatMatrix r;
    for (const auto& row : m) {
      RatVector v;
      for (const auto& e : row) v.push_back(e.empty() ? Rational(0) : e[0]);
      r.push_back(std::move(v));
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline Json matrices_to_json(const MatrixTuple& t) {
  Json ms = Json::array();
  for (const auto& m : t.mats) {
    Json rows = Json::array();
    for (const auto& row : m) {
      Json r = Json::array();
      for (const auto& e : row) r.push_back(zpoly_to_string(e));
      rows.push_back(std::move(r));
    }
    ms.push_back(std::move(rows));
  }
  return {{"matrices", ms}};
}

// ---- Tangent maps ----

inline Json graded_hom_to_json(const GradedHom& phi) {
  Json images = Json::array();
  for (const auto& [g, img] : phi.images) {
    Json terms = Json::array();
    for (const auto& [m, c] : img) terms.push_back({{"monomial", monomial_to_json(m)}, {"c", rational_to_json(c)}});
    images.push_back({{"generator", monomial_to_json(g)}, {"image", terms}});
  }
  return {{"name", phi.name}, {"images", images}};
}

// ---- Trees ----

inline Json tree_to_json(const DirectedEdgeTree& T) {
  Json edges = Json::array();
  for (int i = 1; i <= T.n; ++i) edges.push_back({T.tail(i), T.head(i)});
  return {{"n", T.n}, {"edges", edges}, {"ideal", ideal_to_json(tree_to_ideal(T))}};
}

/// Directed graph on the n+1 vertices; arc i runs from tail to head and is
/// labeled with its edge number.
inline std::string tree_to_dot(const DirectedEdgeTree& T, const std::string& name = "tree") {
  std::string s = "digraph " + name + " {\n";
  for (int v = 0; v <= T.n; ++v) s += "  v" + std::to_string(v) + " [label=\"" + std::to_string(v) + "\"];\n";
  for (int i = 1; i <= T.n; ++i)
    s += "  v" + std::to_string(T.tail(i)) + " -> v" + std::to_string(T.head(i)) + " [label=\"" + std::to_string(i) + "\"];\n";
  return s + "}\n";
}

inline std::string move_label(const MoveEdge& e) {
  if (e.move1 && e.move2) return "move1+move2";
  return e.move1 ? "move1" : "move2";
}

/// Undirected graph on the trees; nodes show the tree ideal, edges the move type.
inline std::string moves_graph_to_dot(const MovesGraph& g) {
  std::string s = "graph moves {\n";
  for (size_t k = 0; k < g.trees.size(); ++k)
    s += "  t" + std::to_string(k) + " [label=\"" + tree_to_ideal(g.trees[k]).to_string() + "\"];\n";
  for (const auto& e : g.edges) {
    s += "  t" + std::to_string(e.a) + " -- t" + std::to_string(e.b) + " [label=\"" + move_label(e) + "\"";
    if (e.move2) s += ", style=dashed";
    s += "];\n";
  }
  return s + "}\n";
}

inline Json moves_graph_to_json(const MovesGraph& g) {
  Json trees = Json::array();
  for (const auto& T : g.trees) trees.push_back(tree_to_json(T));
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({{"a", e.a}, {"b", e.b}, {"move", move_label(e)}});
  return {{"n", g.n}, {"trees", trees}, {"edges", edges}};
}

// ---- H(3,3) table ----

inline std::string table1_csv(const Table1Report& rep) {
  std::string s = "class,tangent,planar,symm,orbit\n";
  for (size_t k = 0; k < rep.entries.size(); ++k) {
    const auto& e = rep.entries[k];
    s += std::to_string(k + 1) + "," + std::to_string(e.row.tangent) + "," + (e.row.planar ? "y" : "n") + "," +
         std::to_string(e.row.symm) + "," + std::to_string(e.orbit) + "\n";
  }
  return s;
}

inline Json table1_to_json(const Table1Report& rep) {
  Json rows = Json::array();
  for (size_t k = 0; k < rep.entries.size(); ++k) {
    const auto& e = rep.entries[k];
    rows.push_back({{"class", k + 1},
                    {"tangent", e.row.tangent},
                    {"planar", e.row.planar},
                    {"symm", e.row.symm},
                    {"orbit", e.orbit},
                    {"ideal", ideal_to_json(e.ideal)}});
  }
  return {{"classes", rows}, {"matches_printed_table", rep.matches}};
}

}  // namespace hilbdiag
