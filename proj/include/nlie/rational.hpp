#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace nlie {

/// Exact rational scalar. GMP keeps values canonical: lowest terms,
/// positive denominator, zero stored as 0/1.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Serialize as "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Strict parse of the wire format: optional sign, digits, optional "/digits".
/// Returns nullopt on anything else (whitespace, empty, zero denominator).
inline std::optional<Rational> parse_rational(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t num_start = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == num_start) return std::nullopt;
  if (i < s.size()) {
    if (s[i] != '/') return std::nullopt;
    ++i;
    std::size_t den_start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == den_start || i != s.size()) return std::nullopt;
    if (s.substr(den_start).find_first_not_of('0') == std::string::npos)
      return std::nullopt;  // zero denominator
  }
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
  r.canonicalize();
  return r;
}

}  // namespace nlie
