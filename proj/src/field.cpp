#include "arrlab/field.hpp"

#include <cctype>

#include "arrlab/errors.hpp"

namespace arrlab {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldDescriptor FieldDescriptor::prime(unsigned long p) {
  if (!is_prime(p)) fail(ErrorCode::BadParam, "field characteristic must be prime");
  if (p > 2147483647UL) fail(ErrorCode::BadParam, "prime too large");
  return FieldDescriptor{Kind::PrimeField, p};
}

FieldDescriptor FieldDescriptor::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  std::string digits;
  if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
    digits = text[1] == ':' ? text.substr(2) : text.substr(1);
  }
  if (digits.empty()) fail(ErrorCode::ParseError, "bad field descriptor '" + text + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(ErrorCode::ParseError, "bad field descriptor '" + text + "'");
  return prime(std::stoul(digits));
}

std::string FieldDescriptor::name() const {
  return is_rationals() ? "Q" : "F" + std::to_string(p);
}

}  // namespace arrlab
