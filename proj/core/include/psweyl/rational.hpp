#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace psw {

using Integer = mpz_class;
using Rational = mpq_class;

/// Reduced "p" or "p/q" rendering.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q" in base 10 and canonicalizes. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

Rational make_rational(const Integer& num, const Integer& den);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer factorial(unsigned n);

}  // namespace psw
