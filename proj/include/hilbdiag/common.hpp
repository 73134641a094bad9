#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hilbdiag {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for rejected inputs (non-squarefree where squarefree is required,
/// singular matrices, malformed files, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
  Rational c = v;
  c.canonicalize();
  return c.get_str();
}

/// Parses "3", "-7/2", "+4" into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  if (s.empty()) throw Error("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw Error("malformed rational literal '" + std::string(text) + "'");
  if (r.get_den() == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

inline int popcount(std::uint64_t v) { return __builtin_popcountll(v); }

/// Indices of the set bits of a mask, ascending.
inline std::vector<int> bits_of(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(__builtin_ctzll(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace hilbdiag
