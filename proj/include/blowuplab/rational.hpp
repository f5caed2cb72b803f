#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace blowuplab {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p/q" or an integer literal. Anything else (decimal points,
/// exponents, whitespace inside the literal, zero denominator) is rejected
/// with a ParseError.
Rational parse_rational(std::string_view text);

/// "p/q" or "p" when the denominator is one.
std::string to_string(const Rational &value);

inline bool is_zero(const Rational &value) { return sgn(value) == 0; }

bool is_zero_vector(const RationalVector &v);

std::string to_string(const RationalVector &v);

/// n!
Rational factorial(unsigned n);

} // namespace blowuplab
