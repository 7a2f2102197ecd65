#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace fsing {

using Rational = mpq_class;

/// Accepts "a", "a/b" or "-a/b"; canonicalizes. Throws InvalidArgument.
Rational parse_rational(std::string_view text);

/// "a/b", or "a" when the denominator is 1.
std::string fraction_string(const Rational& r);

/// Rounded to 15 significant digits for display.
std::string decimal_string(const Rational& r);

/// Smallest integer >= r; throws DegreeOverflow beyond 2^62.
std::int64_t ceil_to_int(const Rational& r);
std::int64_t floor_to_int(const Rational& r);

}  // namespace fsing
