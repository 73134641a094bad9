#pragma once

// Sparse polynomials over Q in the grid variables plus a few auxiliary
// variables (the degeneration parameter z, elimination variables).

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hilbdiag/grid.hpp"

namespace hilbdiag {

using Exponents = std::vector<int>;

/// Variable layout: grid variables occupy indices 0..d*n-1 in row-major
/// order, auxiliary variable k sits at d*n + k. By convention auxiliary 0 is z.
class RatPoly {
 public:
  using Terms = std::map<Exponents, Rational, std::greater<>>;

  RatPoly() = default;
  explicit RatPoly(Shape s, int aux = 0) : shape_(s), aux_(aux) {}

  static RatPoly constant(Shape s, int aux, const Rational& c) {
    RatPoly p(s, aux);
    p.add_term(Exponents(static_cast<size_t>(p.nvars()), 0), c);
    return p;
  }
  static RatPoly variable(Shape s, int aux, int idx) {
    RatPoly p(s, aux);
    Exponents e(static_cast<size_t>(p.nvars()), 0);
    e[static_cast<size_t>(idx)] = 1;
    p.add_term(std::move(e), 1);
    return p;
  }
  static RatPoly grid_var(Shape s, int aux, int row, int col) { return variable(s, aux, s.index(row, col)); }
  static RatPoly aux_var(Shape s, int aux, int k) { return variable(s, aux, s.nvars() + k); }
  static RatPoly from_monomial(const Monomial& m, int aux = 0, const Rational& c = 1) {
    RatPoly p(m.shape(), aux);
    Exponents e = m.exponents();
    e.resize(static_cast<size_t>(p.nvars()), 0);
    p.add_term(std::move(e), c);
    return p;
  }

  Shape shape() const { return shape_; }
  int aux() const { return aux_; }
  int nvars() const { return shape_.nvars() + aux_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(Exponents e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars()) throw Error("RatPoly: exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  RatPoly operator+(const RatPoly& o) const {
    check_ring(o);
    RatPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  RatPoly operator-() const {
    RatPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  RatPoly operator-(const RatPoly& o) const { return *this + (-o); }
  RatPoly operator*(const RatPoly& o) const {
    check_ring(o);
    RatPoly r(shape_, aux_);
    Exponents e(static_cast<size_t>(nvars()));
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  RatPoly operator*(const Rational& c) const {
    RatPoly r(shape_, aux_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
  }
  RatPoly& operator+=(const RatPoly& o) { return *this = *this + o; }
  RatPoly& operator-=(const RatPoly& o) { return *this = *this - o; }

  bool operator==(const RatPoly& o) const { return shape_ == o.shape_ && aux_ == o.aux_ && terms_ == o.terms_; }

  RatPoly pow(int k) const {
    RatPoly r = constant(shape_, aux_, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  /// Same polynomial viewed in a ring with a different number of auxiliary
  /// variables. Dropping a variable that occurs is an error.
  RatPoly with_aux(int aux) const {
    RatPoly r(shape_, aux);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      for (size_t i = static_cast<size_t>(r.nvars()); i < f.size(); ++i)
        if (f[i] != 0) throw Error("RatPoly: dropping an auxiliary variable that occurs");
      f.resize(static_cast<size_t>(r.nvars()), 0);
      r.add_term(std::move(f), c);
    }
    return r;
  }

  int degree_in(int idx) const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e[static_cast<size_t>(idx)]);
    return m;
  }
  int min_degree_in(int idx) const {
    if (terms_.empty()) return 0;
    int m = terms_.begin()->first[static_cast<size_t>(idx)];
    for (const auto& [e, c] : terms_) m = std::min(m, e[static_cast<size_t>(idx)]);
    return m;
  }
  bool involves(int idx) const { return degree_in(idx) > 0; }

  /// Divides by var^k; every term must be divisible.
  RatPoly divide_by_power(int idx, int k) const {
    RatPoly r(shape_, aux_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      f[static_cast<size_t>(idx)] -= k;
      if (f[static_cast<size_t>(idx)] < 0) throw Error("RatPoly: not divisible by the variable power");
      r.add_term(std::move(f), c);
    }
    return r;
  }

  /// Removes the largest power of var dividing every term.
  RatPoly strip_power(int idx) const { return divide_by_power(idx, min_degree_in(idx)); }

  /// Sets variable idx to the value v.
  RatPoly evaluate(int idx, const Rational& v) const {
    RatPoly r(shape_, aux_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      int k = f[static_cast<size_t>(idx)];
      f[static_cast<size_t>(idx)] = 0;
      Rational factor = 1;
      for (int i = 0; i < k; ++i) factor *= v;
      r.add_term(std::move(f), c * factor);
    }
    return r;
  }

  /// Replaces every variable by a polynomial (ring of the images).
  RatPoly substitute(const std::vector<RatPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars()) throw Error("RatPoly: substitution arity mismatch");
    if (images.empty()) return *this;
    Shape s = images.front().shape();
    int aux = images.front().aux();
    std::vector<std::vector<RatPoly>> powers(images.size());
    auto power = [&](size_t v, int k) -> const RatPoly& {
      auto& cache = powers[v];
      if (cache.empty()) cache.push_back(constant(s, aux, 1));
      while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[v]);
      return cache[static_cast<size_t>(k)];
    };
    RatPoly r(s, aux);
    for (const auto& [e, c] : terms_) {
      RatPoly t = constant(s, aux, c);
      for (size_t v = 0; v < e.size(); ++v)
        if (e[v] != 0) t = t * power(v, e[v]);
      r += t;
    }
    return r;
  }

  const Rational& leading_coefficient_lex() const { return terms_.begin()->second; }

  RatPoly monic_lex() const {
    if (terms_.empty()) return *this;
    return *this * (1 / leading_coefficient_lex());
  }

  /// Z^n-degree of a term in the grid variables (auxiliaries have degree 0).
  Multidegree term_multidegree(const Exponents& e) const {
    Multidegree u(static_cast<size_t>(shape_.n), 0);
    for (int i = 0; i < shape_.nvars(); ++i) u[static_cast<size_t>(shape_.col_of(i) - 1)] += e[static_cast<size_t>(i)];
    return u;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    auto u = term_multidegree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (term_multidegree(e) != u) return false;
    return true;
  }

  Multidegree multidegree() const {
    if (terms_.empty()) throw Error("multidegree of the zero polynomial");
    if (!is_homogeneous()) throw Error("polynomial is not Z^n-homogeneous: " + to_string());
    return term_multidegree(terms_.begin()->first);
  }

  /// True if only grid variables occur.
  bool is_grid_only() const {
    for (const auto& [e, c] : terms_)
      for (size_t i = static_cast<size_t>(shape_.nvars()); i < e.size(); ++i)
        if (e[i] != 0) return false;
    return true;
  }

  Monomial grid_monomial(const Exponents& e) const {
    for (size_t i = static_cast<size_t>(shape_.nvars()); i < e.size(); ++i)
      if (e[i] != 0) throw Error("term involves an auxiliary variable");
    return Monomial(shape_, Exponents(e.begin(), e.begin() + shape_.nvars()));
  }

  std::string var(int idx) const {
    if (idx < shape_.nvars()) return var_name(shape_, idx);
    int k = idx - shape_.nvars();
    if (k == 0) return "z";
    return "t" + std::to_string(k);
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational a = abs(c);
      bool neg = c < 0;
      if (first)
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      first = false;
      std::string mono;
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += var(static_cast<int>(i));
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty())
        out += hilbdiag::to_string(a);
      else if (a == 1)
        out += mono;
      else
        out += hilbdiag::to_string(a) + "*" + mono;
    }
    return out;
  }

 private:
  void check_ring(const RatPoly& o) const {
    if (!(shape_ == o.shape_) || aux_ != o.aux_) throw Error("RatPoly: ring mismatch");
  }

  Shape shape_{};
  int aux_ = 0;
  Terms terms_;
};

inline RatPoly operator*(const Rational& c, const RatPoly& p) { return p * c; }

/// Univariate polynomials in z, used for matrix entries over Q[z].
/// Coefficient k is the coefficient of z^k.
using ZPoly = std::vector<Rational>;

inline ZPoly zpoly_trim(ZPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline RatPoly zpoly_to_ratpoly(const ZPoly& p, Shape s, int aux) {
  if (aux < 1) throw Error("z requires an auxiliary variable");
  RatPoly r(s, aux);
  for (size_t k = 0; k < p.size(); ++k) {
    Exponents e(static_cast<size_t>(r.nvars()), 0);
    e[static_cast<size_t>(s.nvars())] = static_cast<int>(k);
    r.add_term(std::move(e), p[k]);
  }
  return r;
}

inline std::string zpoly_to_string(const ZPoly& p) {
  Shape s{1, 1};
  std::string out = zpoly_to_ratpoly(p, s, 1).to_string();
  return out;
}

/// Parses a polynomial in z with rational coefficients, e.g. "z^2-3/2*z",
/// "2", "-z", "(1/3)z^4". Throws Error with the column of the first problem.
inline ZPoly parse_zpoly(std::string_view text) {
  std::string s;
  bool gap = false;
  for (size_t i = 0; i < text.size(); ++i) {
    unsigned char ch = static_cast<unsigned char>(text[i]);
    if (std::isspace(ch)) {
      gap = true;
      continue;
    }
    if (gap && std::isalnum(ch) && !s.empty() && std::isalnum(static_cast<unsigned char>(s.back())))
      throw Error("bad polynomial '" + std::string(text) + "' at column " + std::to_string(i + 1) +
                  ": missing operator");
    gap = false;
    s.push_back(static_cast<char>(ch));
  }
  if (s.empty()) throw Error("empty polynomial");
  ZPoly out;
  size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw Error("bad polynomial '" + std::string(text) + "' at column " + std::to_string(pos + 1) + ": " + what);
  };
  auto add = [&](size_t k, const Rational& c) {
    if (out.size() <= k) out.resize(k + 1, 0);
    out[k] += c;
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      fail("expected '+' or '-'");
    }
    Rational coeff = 1;
    bool have_coeff = false;
    auto read_number = [&]() {
      size_t start = pos;
      while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
      if (start == pos) fail("expected a number");
      return parse_rational(s.substr(start, pos - start));
    };
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      coeff = read_number();
      if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
      ++pos;
      have_coeff = true;
    } else if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = read_number();
      have_coeff = true;
    }
    size_t k = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (!have_coeff) fail("'*' without a coefficient");
      ++pos;
      if (pos >= s.size() || s[pos] != 'z') fail("expected 'z' after '*'");
    }
    if (pos < s.size() && s[pos] == 'z') {
      ++pos;
      k = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected an exponent");
        k = std::stoul(s.substr(start, pos - start));
        if (k > 1000) fail("exponent too large");
      }
    } else if (!have_coeff) {
      fail("expected a term");
    }
    add(k, coeff * sign);
  }
  return zpoly_trim(out);
}

}  // namespace hilbdiag
