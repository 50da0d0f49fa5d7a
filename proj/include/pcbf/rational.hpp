#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace pcbf {

/// Arbitrary-precision rational. All exact construction and checking
/// pipelines run on this type; floating point is confined to the
/// numerical synthesis backend.
using Rat = mpq_class;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses "123", "-0.056", "1/64", "2.5e-3" into an exact rational.
Rat parse_rational(const std::string& text);

/// Exact conversion; every double is a dyadic rational.
Rat rat_from_double(double value);

double rat_to_double(const Rat& value);

/// Decimal string when the denominator is of the form 2^a 5^b,
/// otherwise "p/q". Round-trips through parse_rational.
std::string rat_to_string(const Rat& value);

inline Rat rat_int(long n) { return Rat(n); }

/// p/q from integer literals, canonicalized.
Rat rat_frac(long num, long den);

}  // namespace pcbf
