#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hypersep {

using BigInt = mpz_class;
using Rational = mpq_class;

// Canonical "num/den" text; integers still carry "/1".
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Accepts "NUM", "NUM/DEN" (DEN > 0). Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational pow(const Rational& base, unsigned exponent);

}  // namespace hypersep
