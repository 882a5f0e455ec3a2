#ifndef CCT_RATIONAL_HPP
#define CCT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cct {

/// Exact rational scalar. Arithmetic never rounds; values are kept in lowest
/// terms with a positive denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline int sign(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

/// Parses "p/q", a decimal string ("-3.25"), or a plain integer string.
/// Throws InputError on anything else (including "p/0").
Rational parse_rational(const std::string& text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

}  // namespace cct

#endif  // CCT_RATIONAL_HPP
