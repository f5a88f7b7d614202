#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace golomb {

/// Arbitrary-precision rational. gmpxx keeps every arithmetic result in
/// lowest terms with a positive denominator, so equality is structural.
using Rat = mpq_class;
using RatVector = std::vector<Rat>;

/// Parses "p/q", "p" or "-p/q" (ASCII minus, optional leading '+').
/// The result is canonicalized; a zero denominator is an InputError.
Rat parse_rat(std::string_view text);

/// Canonical "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& value);

inline int sign(const Rat& value) { return sgn(value); }

/// Least common multiple of the denominators.
mpz_class common_denominator(const RatVector& values);

/// Scales `values` to the primitive integer vector with the same direction
/// (lcm of denominators, then divide by the gcd of the numerators).
/// The zero vector maps to itself.
std::vector<mpz_class> primitive_integer_vector(const RatVector& values);

}  // namespace golomb
