#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hecke {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline std::int64_t to_int64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() ||
      z < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + z.str());
  return static_cast<std::int64_t>(z);
}

// Throws if q is not an integer.
inline std::int64_t to_int64(const Rational& q) {
  if (!is_integral(q))
    throw std::domain_error("expected an integer, got " + q.str());
  return to_int64(Integer(boost::multiprecision::numerator(q)));
}

inline Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

/// "a" or "a/b" with b > 0, no spaces.
inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

/// Parses "[-]digits[/digits]". Rejects anything else, including zero
/// denominators.
inline Rational parse_rational(std::string_view s) {
  auto digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  if (!digits(num) || (slash != std::string_view::npos && !digits(den)))
    throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
  Integer n{std::string(num)};
  Integer d = den.empty() ? Integer(1) : Integer(std::string(den));
  if (d == 0) throw std::invalid_argument("zero denominator");
  Rational q(n, d);
  return negative ? Rational(-q) : q;
}

}  // namespace hecke
