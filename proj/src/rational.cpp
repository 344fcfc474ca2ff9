#include "arrlab/rational.hpp"

#include <cctype>

#include "arrlab/errors.hpp"

namespace arrlab {

namespace {

Rational canonicalize(Rational value) {
  mpq_canonicalize(value.backend().data());
  return value;
}

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(long long num, long long den) {
  if (den == 0) fail(ErrorCode::BadParam, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Rational value{BigInt(num), BigInt(den)};
  return canonicalize(value);
}

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(text)) {
      fail(ErrorCode::ParseError, "bad rational literal '" + text + "'");
    }
    return Rational(BigInt(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    fail(ErrorCode::ParseError, "bad rational literal '" + text + "'");
  }
  BigInt d(den);
  if (d == 0) fail(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  BigInt n(num);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return canonicalize(Rational(n, d));
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

double rational_to_double(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace arrlab
