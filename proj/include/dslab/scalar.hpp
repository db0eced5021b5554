#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dslab {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator after each arithmetic operation.
using Scalar = mpq_class;

/// "p/q", or "p" when q == 1.
std::string to_string(const Scalar& s);

/// Parses "p/q" or "p"; throws Error(SchemaViolation) on malformed text.
Scalar parse_scalar(std::string_view text);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

}  // namespace dslab
