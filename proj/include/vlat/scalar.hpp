#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vlat {

/// Exact rational scalar. GMP keeps mpq_class values canonical (reduced,
/// positive denominator) after every arithmetic operation.
using Scalar = mpq_class;

/// Parses "p/q", "p", or a finite decimal such as "-0.25". Throws
/// Error{ParseError} on anything else or on a zero denominator.
Scalar parse_scalar(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format_scalar(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

/// True iff value == 1/m for some positive integer m.
bool is_unit_fraction(const Scalar& value);

}  // namespace vlat
