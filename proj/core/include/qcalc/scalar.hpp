#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qcalc {

/// Exact field element. mpq_class keeps values canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Scalar = mpq_class;

/// Arbitrary-precision integer used for exponents and lattice entries.
using Integer = mpz_class;

/// Parses `INT`, `INT.DIGITS` or `INT/POSINT` (optionally signed) into an
/// exact rational. Returns nullopt on anything else.
std::optional<Scalar> parse_scalar(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& value);

/// Decimal rendering with `digits` significant digits, ties rounded to even.
/// Lossy; exponent notation is used outside [1e-5, 1e15).
std::string to_decimal(const Scalar& value, int digits = 15);

/// Exact rendering plus " (~decimal)" when the value is not an integer.
std::string to_display(const Scalar& value);

/// base^exponent for an integer exponent. Throws ZeroNotInvertible for a
/// zero base with negative exponent and std::overflow_error when |exponent|
/// does not fit a machine word and |base| != 1.
Scalar power(const Scalar& base, const Integer& exponent);

inline bool is_integer(const Scalar& value) { return value.get_den() == 1; }

}  // namespace qcalc
