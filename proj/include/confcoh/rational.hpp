#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace confcoh {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses `a`, `-a`, `a/b` (optional leading sign, decimal digits only).
inline Rational parse_rational(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed rational '" + std::string(text) + "'"); };
  std::size_t i = 0;
  std::string num, den;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) num.push_back(text[i++]);
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num.push_back(text[i++]);
  if (num.empty() || num == "-" || num == "+") throw bad();
  if (num[0] == '+') num.erase(0, 1);
  if (i < text.size()) {
    if (text[i] != '/') throw bad();
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) den.push_back(text[i++]);
    if (den.empty() || i != text.size()) throw bad();
  }
  Rational r;
  r.get_num() = Integer(num, 10);
  r.get_den() = den.empty() ? Integer(1) : Integer(den, 10);
  if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
  r.canonicalize();
  return r;
}

}  // namespace confcoh
