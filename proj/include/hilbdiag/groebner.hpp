#pragma once

// Buchberger's algorithm for weight-plus-lex orders, and the standard
// constructions built on it: elimination, intersection, saturation by z.

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

#include "hilbdiag/poly.hpp"

namespace hilbdiag {

/// Monomials are compared by the weight rows in turn (dot products with the
/// exponent vector), then lexicographically with variable 0 largest. Rows
/// shorter than the number of variables are padded with zeros.
struct TermOrder {
  std::vector<std::vector<std::int64_t>> rows;

  static TermOrder lex() { return {}; }

  /// Total degree first, then lex.
  static TermOrder deglex(int nvars) { return {{std::vector<std::int64_t>(static_cast<size_t>(nvars), 1)}}; }

  /// Total degree, then the given weight rows, then lex.
  static TermOrder graded_weight(int nvars, std::vector<std::vector<std::int64_t>> weight_rows) {
    TermOrder o = deglex(nvars);
    for (auto& r : weight_rows) o.rows.push_back(std::move(r));
    return o;
  }

  /// Eliminates variable `var`: its degree first, then total degree, then lex.
  static TermOrder eliminate(int nvars, int var) {
    std::vector<std::int64_t> first(static_cast<size_t>(nvars), 0);
    first[static_cast<size_t>(var)] = 1;
    return {{first, std::vector<std::int64_t>(static_cast<size_t>(nvars), 1)}};
  }
};

namespace gb_detail {

using Key = std::vector<std::int64_t>;

struct Term {
  Exponents e;
  Key key;
  Rational c;
};

/// Polynomial as terms sorted by the order, largest first.
using Poly = std::vector<Term>;

struct Context {
  const TermOrder* ord;
  size_t nvars;

  Key key_of(const Exponents& e) const {
    Key k(ord->rows.size(), 0);
    for (size_t r = 0; r < ord->rows.size(); ++r) {
      const auto& row = ord->rows[r];
      std::int64_t s = 0;
      for (size_t i = 0; i < e.size() && i < row.size(); ++i) s += row[i] * e[i];
      k[r] = s;
    }
    return k;
  }

  // negative, zero or positive as a < b, a == b, a > b
  static int compare(const Key& ka, const Exponents& ea, const Key& kb, const Exponents& eb) {
    for (size_t r = 0; r < ka.size(); ++r)
      if (ka[r] != kb[r]) return ka[r] < kb[r] ? -1 : 1;
    for (size_t i = 0; i < ea.size(); ++i)
      if (ea[i] != eb[i]) return ea[i] < eb[i] ? -1 : 1;
    return 0;
  }
  static int compare(const Term& a, const Term& b) { return compare(a.key, a.e, b.key, b.e); }

  Poly from(const RatPoly& p) const {
    Poly out;
    for (const auto& [e, c] : p.terms()) out.push_back({e, key_of(e), c});
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return compare(a, b) > 0; });
    return out;
  }

  RatPoly to(const Poly& p, Shape s, int aux) const {
    RatPoly r(s, aux);
    for (const auto& t : p) r.add_term(t.e, t.c);
    return r;
  }
};

inline bool divides(const Exponents& a, const Exponents& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline bool coprime(const Exponents& a, const Exponents& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

/// a - c * m * b, where m is the monomial with exponent vector `shift`.
inline Poly sub_scaled(const Poly& a, const Rational& c, const Exponents& shift, const Key& shift_key, const Poly& b) {
  Poly sb;
  sb.reserve(b.size());
  for (const auto& bt : b) {
    Term t;
    t.e.resize(shift.size());
    for (size_t v = 0; v < shift.size(); ++v) t.e[v] = bt.e[v] + shift[v];
    t.key.resize(shift_key.size());
    for (size_t r = 0; r < shift_key.size(); ++r) t.key[r] = bt.key[r] + shift_key[r];
    t.c = -c * bt.c;
    sb.push_back(std::move(t));
  }
  Poly out;
  out.reserve(a.size() + sb.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < sb.size()) {
    int cmp = Context::compare(a[i], sb[j]);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(sb[j++]));
    } else {
      Rational v = a[i].c + sb[j].c;
      if (v != 0) out.push_back({a[i].e, a[i].key, v});
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < sb.size()) out.push_back(std::move(sb[j++]));
  return out;
}

inline Exponents quotient(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Key key_diff(const Key& a, const Key& b) {
  Key r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

/// Full reduction of p by the basis (every term, not only the leading one).
inline Poly reduce(Poly p, const std::vector<Poly>& basis, const std::vector<bool>* active = nullptr) {
  Poly done;
  while (!p.empty()) {
    const Term& lt = p.front();
    const Poly* div = nullptr;
    for (size_t k = 0; k < basis.size(); ++k) {
      if (active && !(*active)[k]) continue;
      if (!basis[k].empty() && divides(basis[k].front().e, lt.e)) {
        div = &basis[k];
        break;
      }
    }
    if (!div) {
      done.push_back(std::move(p.front()));
      p.erase(p.begin());
      continue;
    }
    Rational c = lt.c / div->front().c;
    Exponents sh = quotient(lt.e, div->front().e);
    Key shk = key_diff(lt.key, div->front().key);
    p = sub_scaled(p, c, sh, shk, *div);
  }
  return done;
}

inline void make_monic(Poly& p) {
  if (p.empty()) return;
  Rational inv = 1 / p.front().c;
  for (auto& t : p) t.c *= inv;
}

}  // namespace gb_detail

/// Reduced Groebner basis, monic, sorted by leading term (ascending).
/// Pair selection uses the normal strategy and the coprime criterion.
inline std::vector<RatPoly> buchberger(const std::vector<RatPoly>& gens, const TermOrder& ord) {
  using namespace gb_detail;
  if (gens.empty()) return {};
  Shape s = gens.front().shape();
  int aux = gens.front().aux();
  Context ctx{&ord, static_cast<size_t>(gens.front().nvars())};

  std::vector<Poly> basis;
  std::vector<bool> active;
  struct Pair {
    Exponents lcm;
    Key key;
    size_t i, j;
  };
  auto pair_less = [](const Pair& a, const Pair& b) {
    int c = Context::compare(a.key, a.lcm, b.key, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };
  std::set<Pair, decltype(pair_less)> pairs(pair_less);

  auto add = [&](Poly p) {
    make_monic(p);
    size_t idx = basis.size();
    const Exponents& lt = p.front().e;
    for (size_t k = 0; k < basis.size(); ++k) {
      if (!active[k]) continue;
      Exponents l = lcm(basis[k].front().e, lt);
      pairs.insert({l, ctx.key_of(l), k, idx});
    }
    basis.push_back(std::move(p));
    active.push_back(true);
  };

  for (const auto& g : gens) {
    if (!(g.shape() == s) || g.aux() != aux) throw Error("buchberger: generators live in different rings");
    Poly p = reduce(ctx.from(g), basis, &active);
    if (!p.empty()) add(std::move(p));
  }

  while (!pairs.empty()) {
    Pair pr = *pairs.begin();
    pairs.erase(pairs.begin());
    const Poly& f = basis[pr.i];
    const Poly& g = basis[pr.j];
    if (coprime(f.front().e, g.front().e)) continue;
    // Drop the pair if some other element's leading term divides the lcm
    // and both of its pairs with i and j were already handled (chain criterion).
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!divides(basis[k].front().e, pr.lcm)) continue;
      auto handled = [&](size_t a, size_t b) {
        Exponents l = lcm(basis[a].front().e, basis[b].front().e);
        Pair q{l, ctx.key_of(l), std::min(a, b), std::max(a, b)};
        return pairs.find(q) == pairs.end();
      };
      if (handled(k, pr.i) && handled(k, pr.j) && lcm(basis[k].front().e, f.front().e) != pr.lcm &&
          lcm(basis[k].front().e, g.front().e) != pr.lcm)
        skip = true;
    }
    if (skip) continue;
    Exponents sf = quotient(pr.lcm, f.front().e);
    Exponents sg = quotient(pr.lcm, g.front().e);
    Poly sp = sub_scaled(Poly{}, -1, sf, key_diff(pr.key, f.front().key), f);
    sp = sub_scaled(sp, 1, sg, key_diff(pr.key, g.front().key), g);
    sp = reduce(std::move(sp), basis, &active);
    if (!sp.empty()) add(std::move(sp));
  }

  // Minimalize, then inter-reduce.
  std::vector<Poly> minimal;
  for (size_t k = 0; k < basis.size(); ++k) {
    bool redundant = false;
    for (size_t l = 0; l < basis.size() && !redundant; ++l) {
      if (l == k) continue;
      const auto& a = basis[l].front().e;
      const auto& b = basis[k].front().e;
      if (divides(a, b) && (a != b || l < k)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[k]);
  }
  std::vector<Poly> reduced;
  for (size_t k = 0; k < minimal.size(); ++k) {
    Poly head{minimal[k].front()};
    Poly tail(minimal[k].begin() + 1, minimal[k].end());
    std::vector<Poly> others;
    for (size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(minimal[l]);
    Poly t = reduce(std::move(tail), others);
    head.insert(head.end(), t.begin(), t.end());
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Poly& a, const Poly& b) { return Context::compare(a.front(), b.front()) < 0; });
  std::vector<RatPoly> out;
  for (const auto& p : reduced) out.push_back(ctx.to(p, s, aux));
  return out;
}

/// Normal form of p modulo a Groebner basis for the same order.
inline RatPoly normal_form(const RatPoly& p, const std::vector<RatPoly>& gb, const TermOrder& ord) {
  using namespace gb_detail;
  Context ctx{&ord, static_cast<size_t>(p.nvars())};
  std::vector<Poly> basis;
  for (const auto& g : gb) basis.push_back(ctx.from(g));
  return ctx.to(reduce(ctx.from(p), basis), p.shape(), p.aux());
}

/// Leading exponent and whether it is strictly the largest term on the
/// weight rows alone (no lex tiebreak needed).
struct LeadingTerm {
  Exponents exponents;
  Rational coefficient;
  bool decisive = true;
};

inline LeadingTerm leading_term(const RatPoly& p, const TermOrder& ord) {
  using namespace gb_detail;
  if (p.is_zero()) throw Error("leading term of the zero polynomial");
  Context ctx{&ord, static_cast<size_t>(p.nvars())};
  Poly q = ctx.from(p);
  LeadingTerm lt{q.front().e, q.front().c, true};
  if (q.size() > 1 && q[1].key == q[0].key) lt.decisive = false;
  return lt;
}

struct InitialIdealResult {
  MonomialIdeal ideal;
  std::vector<RatPoly> basis;
  bool decisive = true;
};

/// Leading terms of the reduced Groebner basis of grid-only generators.
inline InitialIdealResult initial_ideal(const std::vector<RatPoly>& gens, const TermOrder& ord) {
  if (gens.empty()) throw Error("initial_ideal: no generators (ring unknown)");
  Shape s = gens.front().shape();
  InitialIdealResult res{MonomialIdeal(s), buchberger(gens, ord), true};
  std::vector<Monomial> lts;
  for (const auto& g : res.basis) {
    auto lt = leading_term(g, ord);
    res.decisive = res.decisive && lt.decisive;
    lts.push_back(g.grid_monomial(lt.exponents));
  }
  res.ideal = MonomialIdeal(s, std::move(lts));
  return res;
}

/// Generators of (ideal of gens) intersected with the subring without the
/// last auxiliary variable; the results live in the smaller ring.
inline std::vector<RatPoly> eliminate_last(const std::vector<RatPoly>& gens) {
  if (gens.empty()) return {};
  int nv = gens.front().nvars();
  int aux = gens.front().aux();
  if (aux < 1) throw Error("eliminate_last: no auxiliary variable");
  auto gb = buchberger(gens, TermOrder::eliminate(nv, nv - 1));
  std::vector<RatPoly> out;
  for (const auto& g : gb)
    if (!g.involves(nv - 1)) out.push_back(g.with_aux(aux - 1));
  return out;
}

/// I cap J = elim_t (t I + (1 - t) J).
inline std::vector<RatPoly> intersect(const std::vector<RatPoly>& a, const std::vector<RatPoly>& b) {
  if (a.empty() || b.empty()) return {};
  Shape s = a.front().shape();
  int aux = a.front().aux();
  auto t = RatPoly::aux_var(s, aux + 1, aux);
  auto one_minus_t = RatPoly::constant(s, aux + 1, 1) - t;
  std::vector<RatPoly> gens;
  for (const auto& f : a) gens.push_back(t * f.with_aux(aux + 1));
  for (const auto& g : b) gens.push_back(one_minus_t * g.with_aux(aux + 1));
  return eliminate_last(gens);
}

inline std::vector<RatPoly> intersect_all(const std::vector<std::vector<RatPoly>>& ideals) {
  if (ideals.empty()) throw Error("intersect_all: empty family");
  std::vector<RatPoly> acc = ideals.front();
  for (size_t k = 1; k < ideals.size(); ++k) acc = intersect(acc, ideals[k]);
  return acc;
}

/// (L : z^infinity) with z = auxiliary 0, computed by adjoining 1 - t z and
/// eliminating t. Each output has its z-content removed and is monic.
inline std::vector<RatPoly> saturate_z(const std::vector<RatPoly>& L) {
  if (L.empty()) return {};
  Shape s = L.front().shape();
  int aux = L.front().aux();
  if (aux < 1) throw Error("saturate_z: polynomials have no z variable");
  int zi = s.nvars();
  std::vector<RatPoly> gens;
  for (const auto& f : L) gens.push_back(f.with_aux(aux + 1));
  auto z = RatPoly::aux_var(s, aux + 1, 0);
  auto t = RatPoly::aux_var(s, aux + 1, aux);
  gens.push_back(RatPoly::constant(s, aux + 1, 1) - t * z);
  std::vector<RatPoly> out;
  for (const auto& g : eliminate_last(gens)) out.push_back(g.strip_power(zi).monic_lex());
  return out;
}

/// Ideal membership test via a Groebner basis.
inline bool ideal_contains(const std::vector<RatPoly>& gb, const RatPoly& p, const TermOrder& ord) {
  return normal_form(p, gb, ord).is_zero();
}

/// Equality of ideals, by comparing reduced Groebner bases.
inline bool same_ideal(const std::vector<RatPoly>& a, const std::vector<RatPoly>& b, const TermOrder& ord) {
  return buchberger(a, ord) == buchberger(b, ord);
}

}  // namespace hilbdiag
