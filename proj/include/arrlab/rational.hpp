#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace arrlab {

// Exact rational scalar backed by GMP. Values are kept canonical
// (gcd(|num|, den) = 1, den > 0); construct through the helpers below,
// arithmetic on canonical operands stays canonical.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

Rational make_rational(long long num, long long den = 1);

// Accepts "p/q", "p", or a decimal-free signed integer string.
Rational parse_rational(const std::string& text);

// "p/q" when den != 1, plain integer otherwise.
std::string format_rational(const Rational& value);

double rational_to_double(const Rational& value);

}  // namespace arrlab
