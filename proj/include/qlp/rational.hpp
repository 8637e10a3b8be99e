#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qlp {

// Exact rational scalar. mpq_class keeps every arithmetic result in
// canonical form (positive denominator, lowest terms); the only way to
// obtain a non-canonical value is raw string construction, which
// parse_rational guards.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" (q != 0) into canonical form.
Rational parse_rational(std::string_view text);

// Canonical text: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

Rational pow(const Rational& base, unsigned exponent);

} // namespace qlp
