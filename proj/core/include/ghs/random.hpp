#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ghs/chain.hpp"
#include "ghs/monomial.hpp"
#include "ghs/series.hpp"

namespace ghs {

/// Deterministic seeded generator of monomials and series over a pool of
/// fundamentals, used by the sampled Hardy verifiers and the test corpora.
/// Exponents and coefficients are rationals p/q with |p| <= mag, 1 <= q <= den.
class RandomGen {
public:
    RandomGen(std::vector<Fundamental> pool, std::uint64_t seed, long mag = 5, long den = 3);

    Rational rational(bool nonzero = false);
    const Fundamental& fundamental();
    Monomial monomial(std::size_t max_factors = 3, bool nonidentity = false);
    Series series(std::size_t max_terms = 4, bool nonzero = false);
    /// Series with LM != 1 (valid l'Hospital operand).
    Series nonunit_series(std::size_t max_terms = 4);
    std::uint64_t raw() { return rng_(); }

private:
    std::vector<Fundamental> pool_;
    long mag_, den_;
    std::mt19937_64 rng_;
};

} // namespace ghs
