#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace qbound::ratlp {

// Arbitrary-precision exact rational. GMP's mpq keeps every arithmetic
// result canonical (gcd(|num|, den) = 1, den > 0), which the whole
// toolkit relies on: measure equalities are tested as identical rationals.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses "p" or "p/q" (optional leading '-'). Canonicalizes, so "4/6"
/// yields 2/3. Throws SyntaxError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering: "2", "-7/3", "0".
std::string to_string(const Rational& r);

/// floor(r + 1/2), i.e. rounding half up. Used by the random-domain sizing.
BigInt round_half_up(const Rational& r);

}  // namespace qbound::ratlp
