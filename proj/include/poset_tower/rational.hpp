#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace poset_tower {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (decimal integers, q > 0); the result is canonical.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
std::string format_rational(const Rational& value);

}  // namespace poset_tower
