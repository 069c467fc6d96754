#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rees {

// Exact rationals; GMP keeps them in lowest terms with a positive denominator.
using Rational = mpq_class;

std::string to_string(const Rational& q);

// Parses "n" or "n/d" (optional leading '-'). Throws InvalidArgumentError.
Rational parse_rational(std::string_view text);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

}  // namespace rees
