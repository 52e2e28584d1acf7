#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace booklab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "NUM/DEN", a plain integer, or a finite decimal such as "0.05" into an exact
/// rational. DEN must be positive. Throws DomainError("malformed rational: ...").
Rational parse_rational(std::string_view text);

/// Canonical wire form "NUM/DEN" (always with a denominator, e.g. "1/1").
std::string to_string(const Rational& r);

double to_double(const Rational& r);

inline Rational ratio(std::int64_t num, std::int64_t den) { return Rational(num, den); }

}  // namespace booklab
