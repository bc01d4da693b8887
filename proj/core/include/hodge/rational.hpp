#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hodge {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws
/// Error(InvalidInput) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is one.
std::string to_string(const Rational& q);

}  // namespace hodge
