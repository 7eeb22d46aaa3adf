#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace descartes {

// GMP keeps mpq_class canonical: lowest terms, positive denominator.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or a finite decimal such as "-4.791" (exactly).
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

int sign(const Rational& value);

Rational pow(const Rational& base, unsigned exponent);

/// Rational with a dyadic denominator approximating `value` to `bits` significant bits.
Rational from_double(double value, int bits = 53);

double to_double(const Rational& value);

}  // namespace descartes
