#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ghs {

/// Exact rational scalar used for exponents and coefficients throughout.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

int sign(const Rational& r);

/// Canonical text form: `p` when the denominator is 1, else `p/q`.
std::string to_string(const Rational& r);

/// Parses `p` or `p/q` (optionally signed). Returns nullopt on malformed
/// input or zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

} // namespace ghs
