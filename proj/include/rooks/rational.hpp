#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rooks {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "-p/q" or a plain integer. The result is canonicalized.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical p/q. Throws std::invalid_argument when q == 0.
Rational ratio(std::int64_t p, std::int64_t q);

/// Canonical "p/q" text; integers are printed without a denominator.
std::string format_rational(const Rational& q);

double to_double(const Rational& q);
inline double to_double(double x) { return x; }

std::int64_t floor_int(const Rational& q);
std::int64_t ceil_int(const Rational& q);

/// Generalized binomial a(a-1)...(a-b+1)/b! for integer a and b >= 0.
BigInt binomial(std::int64_t a, std::int64_t b);
BigInt factorial(std::int64_t n);
BigInt catalan(std::int64_t n);

}  // namespace rooks
