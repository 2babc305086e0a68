#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace plethys {

using BigInt = mpz_class;
// mpq_class keeps itself in lowest terms with a positive denominator as long
// as every value is built through its arithmetic or through make_rational.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);

// Parses "a" or "a/b" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

bool is_integer(const Rational& v);

BigInt factorial(int n);
BigInt pow2(unsigned long e);

}  // namespace plethys
