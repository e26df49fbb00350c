#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghs/errors.hpp"
#include "ghs/random.hpp"
#include "ghs/series.hpp"

using namespace ghs;

namespace {

const FundamentalChain kChain = FundamentalChain::integer_indexed();

Monomial E(long k, Rational e = 1) { return Monomial::fundamental(Fundamental(k), e); }

bool canonical(const Series& a) {
    for (std::size_t i = 0; i < a.terms().size(); ++i) {
        if (a.terms()[i].coeff == 0)
            return false;
        if (i > 0 && !(a.terms()[i].mon < a.terms()[i - 1].mon))
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("term-list normalization") {
    const Series a = Series::from_terms({{1, E(0)},
                                         {Rational(1, 2), Monomial::one()},
                                         {-1, E(0)},
                                         {Rational(1, 2), Monomial::one()}});
    CHECK(a == Series::constant(1));
    CHECK(Series::from_terms({{3, E(1)}, {-3, E(1)}}).is_zero());
}

TEST_CASE("ring laws and canonical form on random triples") {
    RandomGen gen(kChain.window(-4, 4), 99);
    for (int i = 0; i < 1200; ++i) {
        const Series a = gen.series();
        const Series b = gen.series();
        const Series c = gen.series();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a - a == Series::zero());
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * Series::constant(1) == a);
        CHECK(canonical(a + b));
        CHECK(canonical(a * b));
    }
}

TEST_CASE("valuation laws: LM multiplicativity and the ultrametric sum law") {
    RandomGen gen(kChain.window(-4, 4), 123);
    int checked = 0;
    while (checked < 5000) {
        const Series a = gen.series(4, true);
        const Series b = gen.series(4, true);
        ++checked;
        CHECK(mul(a.leading_monomial(), b.leading_monomial()) ==
              (a * b).leading_monomial());
        CHECK((a * b).leading_coeff() == Rational(a.leading_coeff() * b.leading_coeff()));
        const Series s = a + b;
        if (!s.is_zero()) {
            const Monomial bound = std::max(a.leading_monomial(), b.leading_monomial());
            CHECK(s.leading_monomial() <= bound);
        }
    }
}

TEST_CASE("dominance relation laws") {
    RandomGen gen(kChain.window(-4, 4), 321);
    // 0 < 1 in the coefficient-sign order, and 1 dominates nothing bigger
    CHECK(Series::constant(1).sign() > 0);
    for (int i = 0; i < 2500; ++i) {
        const Series a = gen.series();
        const Series b = gen.series();
        const Series c = gen.series();
        CHECK(Series::dominance(a, a) == 0);                   // reflexive
        CHECK(Series::dominance(a, b) == -Series::dominance(b, a)); // total
        if (Series::dominance(a, b) <= 0 && Series::dominance(b, c) <= 0)
            CHECK(Series::dominance(a, c) <= 0);               // transitive
        if (Series::dominance(a, b) <= 0)
            CHECK(Series::dominance(a * c, b * c) <= 0);       // scaling
        if (Series::dominance(a, c) <= 0 && Series::dominance(b, c) <= 0)
            CHECK(Series::dominance(a - b, c) <= 0);           // difference
        if (a.sign() >= 0 && (b - a).sign() >= 0)
            CHECK(Series::dominance(a, b) <= 0);               // order-compatible
    }
}

TEST_CASE("equivalence means equal leading terms") {
    const Series a = Series::monomial(2, E(1)) + Series::constant(5);
    const Series b = Series::monomial(2, E(1)) - Series::monomial(E(0, -1));
    CHECK(Series::equivalent(a, b));
    CHECK(!Series::equivalent(a, a + a));
    CHECK(Series::equivalent(Series::zero(), Series::zero()));
}

TEST_CASE("decomposition into purely infinite, constant, and infinitesimal parts") {
    RandomGen gen(kChain.window(-4, 4), 555);
    for (int i = 0; i < 800; ++i) {
        const Series a = gen.series(6);
        const SeriesDecomposition d = a.decompose();
        CHECK(a == d.infinite_part + Series::constant(d.constant_part) +
                       d.infinitesimal_part);
        for (const Term& t : d.infinite_part.terms())
            CHECK(t.mon > Monomial::one());
        for (const Term& t : d.infinitesimal_part.terms())
            CHECK(t.mon < Monomial::one());
    }
}

TEST_CASE("truncated inversion") {
    const Series one = Series::constant(1);

    SUBCASE("single terms invert exactly") {
        const Series a = Series::monomial(Rational(3, 2), E(2, 2));
        CHECK(a * a.invert(4) == one);
    }
    SUBCASE("geometric tail is reproduced") {
        const Series a = one + Series::monomial(E(0, -1));
        const Series inv = a.invert(3);
        // 1 - x^-1 + x^-2
        CHECK(inv.terms().size() == 3);
        CHECK(inv.terms()[1].coeff == -1);
        const Series err = a * inv - one;
        CHECK(!err.is_zero());
        CHECK(err.leading_monomial() <= E(0, -3));
    }
    SUBCASE("retained terms are genuine leading terms of the inverse") {
        RandomGen gen(kChain.window(-3, 3), 777);
        for (int i = 0; i < 300; ++i) {
            const Series a = gen.series(4, true);
            const Series inv_lo = a.invert(4);
            const Series inv_hi = a.invert(7);
            // a deeper expansion only extends the shallower one
            REQUIRE(inv_lo.terms().size() <= inv_hi.terms().size());
            for (std::size_t k = 0; k < inv_lo.terms().size(); ++k)
                CHECK(inv_lo.terms()[k] == inv_hi.terms()[k]);
            const Series err = a * inv_hi - one;
            if (!err.is_zero())
                CHECK(err.leading_monomial() < Monomial::one());
        }
    }
    SUBCASE("zero cannot be inverted") {
        CHECK_THROWS_AS(Series::zero().invert(3), division_by_zero);
    }
}
