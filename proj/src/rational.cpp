#include "cct/rational.hpp"

#include <cctype>
#include <cstddef>

#include "cct/errors.hpp"

namespace cct {

namespace {

bool is_integer_literal(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  // trim surrounding whitespace
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw InputError("empty rational literal");
  s = s.substr(b, e - b + 1);

  bool negative = false;
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = (s[pos] == '-');
    ++pos;
  }

  std::size_t slash = s.find('/', pos);
  std::size_t dot = s.find('.', pos);
  if (slash != std::string::npos && dot != std::string::npos)
    throw InputError("rational literal mixes '/' and '.': '" + text + "'");

  Rational result;
  if (slash != std::string::npos) {
    if (!is_integer_literal(s, pos, slash) || !is_integer_literal(s, slash + 1, s.size()))
      throw InputError("malformed fraction literal: '" + text + "'");
    BigInt num(s.substr(pos, slash - pos));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + text + "'");
    result = Rational(num, den);
  } else if (dot != std::string::npos) {
    std::string ip = s.substr(pos, dot - pos);
    std::string fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw InputError("malformed decimal literal: '" + text + "'");
    if (!ip.empty() && !is_integer_literal(ip, 0, ip.size()))
      throw InputError("malformed decimal literal: '" + text + "'");
    if (!fp.empty() && !is_integer_literal(fp, 0, fp.size()))
      throw InputError("malformed decimal literal: '" + text + "'");
    BigInt num = ip.empty() ? BigInt(0) : BigInt(ip);
    BigInt den = 1;
    for (char c : fp) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    result = Rational(num, den);
  } else {
    if (!is_integer_literal(s, pos, s.size()))
      throw InputError("malformed integer literal: '" + text + "'");
    result = Rational(BigInt(s.substr(pos)));
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& r) {
  std::string num = numerator(r).str();
  if (denominator(r) == 1) return num;
  return num + "/" + denominator(r).str();
}

}  // namespace cct
