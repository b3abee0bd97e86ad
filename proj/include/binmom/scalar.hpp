#pragma once

// Exact scalars used everywhere in the library. Both are GMP-backed and
// unbounded; nothing in the derivation path ever touches a float.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace binmom {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "a", "a/b" or a plain decimal such as "0.35" / "-1.5e-3" into an
/// exact rational. Decimals are converted through a power-of-ten denominator,
/// never through binary floating point. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "a" when the value is integral, otherwise "a/b".
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Decimal rendering with `digits` significant digits, trailing zeros trimmed
/// (the behaviour of printf's %g, but computed from the exact value).
std::string to_decimal(const Rational& value, int digits = 15);

} // namespace binmom
