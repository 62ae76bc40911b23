#pragma once

// Exact integer and rational types shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "zeck/error.hpp"

namespace zeck {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t\r\n");
  auto last = s.find_last_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw error(errc::parse_error, "empty integer literal");
  }
  s = s.substr(first, last - first + 1);
  std::size_t digits_from = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (digits_from == s.size()) {
    throw error(errc::parse_error, "malformed integer literal '" + s + "'");
  }
  for (std::size_t i = digits_from; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw error(errc::parse_error, "malformed integer literal '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s);
}

inline std::string to_string(const BigInt& x) { return x.str(); }

/// "p/q" (or "p" for integers), always in lowest terms.
inline std::string to_string(const Rational& x) {
  const BigInt& den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

inline double to_double(const BigInt& x) { return x.convert_to<double>(); }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw error(errc::division_by_zero, "zero denominator");
  return Rational(num, den);
}

}  // namespace zeck
