#include "ghs/random.hpp"

#include "ghs/errors.hpp"

namespace ghs {

RandomGen::RandomGen(std::vector<Fundamental> pool, std::uint64_t seed, long mag, long den)
    : pool_(std::move(pool)), mag_(mag), den_(den), rng_(seed) {
    if (pool_.empty())
        throw domain_error("random generator needs a nonempty pool of fundamentals");
}

Rational RandomGen::rational(bool nonzero) {
    std::uniform_int_distribution<long> num(-mag_, mag_);
    std::uniform_int_distribution<long> den(1, den_);
    long p = num(rng_);
    while (nonzero && p == 0)
        p = num(rng_);
    return Rational(p, den(rng_));
}

const Fundamental& RandomGen::fundamental() {
    std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
    return pool_[pick(rng_)];
}

Monomial RandomGen::monomial(std::size_t max_factors, bool nonidentity) {
    std::uniform_int_distribution<std::size_t> count(nonidentity ? 1 : 0, max_factors);
    for (;;) {
        std::vector<Monomial::Factor> factors;
        const std::size_t n = count(rng_);
        for (std::size_t i = 0; i < n; ++i)
            factors.emplace_back(fundamental(), rational(true));
        Monomial m = Monomial::from_factors(std::move(factors));
        if (!nonidentity || !m.is_one())
            return m;
    }
}

Series RandomGen::series(std::size_t max_terms, bool nonzero) {
    std::uniform_int_distribution<std::size_t> count(nonzero ? 1 : 0, max_terms);
    for (;;) {
        std::vector<Term> terms;
        const std::size_t n = count(rng_);
        for (std::size_t i = 0; i < n; ++i)
            terms.push_back({rational(true), monomial()});
        Series a = Series::from_terms(std::move(terms));
        if (!nonzero || !a.is_zero())
            return a;
    }
}

Series RandomGen::nonunit_series(std::size_t max_terms) {
    for (;;) {
        Series head = Series::monomial(rational(true), monomial(3, true));
        Series tail = series(max_terms > 0 ? max_terms - 1 : 0);
        Series a = head + tail;
        if (!a.is_zero() && !a.leading_monomial().is_one())
            return a;
    }
}

} // namespace ghs
