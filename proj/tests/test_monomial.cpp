#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghs/errors.hpp"
#include "ghs/monomial.hpp"
#include "ghs/random.hpp"

using namespace ghs;

namespace {

const FundamentalChain kChain = FundamentalChain::integer_indexed();

Monomial E(long k, Rational e = 1) { return Monomial::fundamental(Fundamental(k), e); }

} // namespace

TEST_CASE("normalization fuses, sorts, and drops zero exponents") {
    Monomial m = Monomial::from_factors({{Fundamental(0), Rational(1, 2)},
                                         {Fundamental(2), 3},
                                         {Fundamental(0), Rational(1, 2)},
                                         {Fundamental(1), 0}});
    REQUIRE(m.factors().size() == 2);
    CHECK(m.factors()[0].first == Fundamental(2));
    CHECK(m.factors()[0].second == 3);
    CHECK(m.factors()[1].second == 1);
    CHECK(mul(m, m.inverse()).is_one());
    CHECK(Monomial::from_factors({{Fundamental(3), 2}, {Fundamental(3), -2}}).is_one());
}

TEST_CASE("anti-lexicographic order on hand examples") {
    CHECK(E(1) > E(0, 5));
    CHECK(E(1, -1) < E(0, -3));
    CHECK(E(0, Rational(1, 2)) < E(0, 1));
    CHECK(E(-1, 4) < E(0, Rational(1, 3)));
    CHECK(mul(E(1), E(0, -7)) > E(0, 100));
    CHECK(Monomial::one() < E(0));
    CHECK(E(0, -1) < Monomial::one());
}

TEST_CASE("leading fundamental, exponent, and absolute value") {
    const Monomial m = mul(E(2, Rational(-1, 2)), E(0, 3));
    REQUIRE(m.leading_fundamental());
    CHECK(*m.leading_fundamental() == Fundamental(2));
    CHECK(m.leading_exponent() == Rational(-1, 2));
    const auto [abs, sgn] = m.abs_sign();
    CHECK(sgn == -1);
    CHECK(abs == m.inverse());
    CHECK(Monomial::one().abs_sign() == std::make_pair(Monomial::one(), 1));
    CHECK(!Monomial::one().leading_fundamental());
    CHECK_THROWS_AS(Monomial::one().leading_exponent(), domain_error);
}

TEST_CASE("group and order laws on random triples") {
    for (int chain_case = 0; chain_case < 2; ++chain_case) {
        const FundamentalChain chain =
            chain_case == 0 ? FundamentalChain::finite_list({"u", "v", "w", "p", "q", "r"})
                            : kChain;
        RandomGen gen(chain.window(chain_case == 0 ? 0 : -4, chain_case == 0 ? 5 : 4), 42);
        for (int i = 0; i < 1500; ++i) {
            const Monomial a = gen.monomial();
            const Monomial b = gen.monomial();
            const Monomial c = gen.monomial();
            CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
            CHECK(mul(a, b) == mul(b, a));
            CHECK(mul(a, Monomial::one()) == a);
            CHECK(mul(a, a.inverse()).is_one());
            CHECK(a.pow(Rational(3, 2)).pow(Rational(2, 3)) == a);

            // order: totality, antisymmetry, translation invariance
            const int ab = Monomial::compare(a, b);
            CHECK(ab == -Monomial::compare(b, a));
            if (ab < 0) {
                CHECK(mul(a, c) < mul(b, c));
                CHECK(b.inverse() < a.inverse());
            }
            const int bc = Monomial::compare(b, c);
            if (ab <= 0 && bc <= 0)
                CHECK(Monomial::compare(a, c) <= 0);
        }
    }
}

TEST_CASE("leading-data laws on random pairs") {
    RandomGen gen(kChain.window(-4, 4), 7);
    const auto lf_key = [](const Monomial& m) {
        // identity below every fundamental
        return m.leading_fundamental() ? m.leading_fundamental()->index()
                                       : Rational(-1000000);
    };
    for (int i = 0; i < 2000; ++i) {
        const Monomial a = gen.monomial(3, true);
        const Monomial b = gen.monomial(3, true);

        // ratio criterion: a < b iff LE(b/a) > 0
        if (a != b) {
            const Monomial ratio = mul(b, a.inverse());
            CHECK((a < b) == (sign(ratio.leading_exponent()) > 0));
        }

        // scalar exponentiation preserves LF and scales LE
        const Rational r = gen.rational(true);
        CHECK(a.pow(r).leading_fundamental() == a.leading_fundamental());
        CHECK(a.pow(r).leading_exponent() == Rational(r * a.leading_exponent()));

        // equal signs: LF of the product is the max of the LFs
        if (a.abs_sign().second == b.abs_sign().second && !mul(a, b).is_one()) {
            const Rational expect = std::max(lf_key(a), lf_key(b));
            CHECK(lf_key(mul(a, b)) == expect);
        }

        // a ratio dropping below LF(b) forces equal leading data
        if (lf_key(mul(b, a.inverse())) < lf_key(b)) {
            CHECK(a.leading_fundamental() == b.leading_fundamental());
            CHECK(a.leading_exponent() == b.leading_exponent());
            CHECK(a.abs_sign().second == b.abs_sign().second);
        }
    }
}
