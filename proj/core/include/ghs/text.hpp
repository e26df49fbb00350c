#pragma once

#include <string>
#include <string_view>

#include "ghs/chain.hpp"
#include "ghs/monomial.hpp"
#include "ghs/series.hpp"

namespace ghs {

/// Canonical text form. Terms descend by monomial and are joined with
/// ` + ` / ` - `; a unit coefficient is omitted unless the monomial is 1.
/// Within a monomial, factors of indexed chains are printed in increasing
/// distance from index 0 (ties: the nonnegative index first), so that
/// iterated-exp/log products read naturally (`x*E_-1`, `E_1*E_2`);
/// FiniteList factors print in ascending list order. Round-trips bit-exactly
/// through parse_series.
std::string to_string(const Monomial& m, const FundamentalChain& chain);
std::string to_string(const Series& a, const FundamentalChain& chain);

/// Parses the term grammar `[+-] coeff*name^p/q*...` (whitespace-
/// insensitive, arbitrary term order, `^` binds tighter than `*`) and
/// normalizes. Throws parse_error with position and expected-token info.
Series parse_series(std::string_view text, const FundamentalChain& chain);

/// Single monomial with optional coefficient 1 omitted; `1` is the identity.
Monomial parse_monomial(std::string_view text, const FundamentalChain& chain);

} // namespace ghs
