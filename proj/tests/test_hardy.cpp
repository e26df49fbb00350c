#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghs/errors.hpp"
#include "ghs/hardy.hpp"
#include "ghs/random.hpp"

using namespace ghs;

namespace {

const FundamentalChain kChain = FundamentalChain::integer_indexed();
const DerivationSchema kLogExp = DerivationSchema::log_exp(kChain);

Monomial E(long k, Rational e = 1) { return Monomial::fundamental(Fundamental(k), e); }

DerivationSchema adversarial(long lo, long hi) {
    std::map<Rational, Series> table;
    for (long k = lo; k <= hi; ++k)
        table[k] = Series::monomial(E(k + 1));
    return DerivationSchema::explicit_table(kChain, std::move(table));
}

} // namespace

TEST_CASE("h3prime holds on the log-exp rule, window E_-5..E_5") {
    const ConditionReport r = check_h3prime(kLogExp, kChain.window(-5, 5));
    CHECK(r.verdict == Verdict::Holds);
}

TEST_CASE("l'Hospital: preconditions and hand pairs") {
    CHECK_THROWS_AS(verify_lhospital(kLogExp, Series::zero(), Series::constant(1)),
                    domain_error);
    CHECK_THROWS_AS(verify_lhospital(kLogExp, Series::constant(2),
                                     Series::monomial(E(0))),
                    domain_error);
    CHECK(verify_lhospital(kLogExp, Series::monomial(E(0, 2)), Series::monomial(E(1))));
    CHECK(verify_lhospital(kLogExp, Series::monomial(E(-1)), Series::monomial(E(0, -1))));
}

TEST_CASE("log-compatibility: preconditions and hand pairs") {
    CHECK_THROWS_AS(verify_log_compat(kLogExp, Series::monomial(E(0)),
                                      Series::constant(3)),
                    domain_error);
    CHECK_THROWS_AS(verify_log_compat(kLogExp, Series::monomial(E(0)),
                                      Series::monomial(E(1))),
                    domain_error);
    // |e^x| > |x| > 1: (e^x)'/e^x = 1 dominates x'/x = 1/x, not asymptotic
    CHECK(verify_log_compat(kLogExp, Series::monomial(E(1)), Series::monomial(E(0))));
    // comparable pair: x^3 vs x^2 share the leading fundamental
    CHECK(verify_log_compat(kLogExp, Series::monomial(E(0, 3)), Series::monomial(E(0, 2))));
    // |x^-2| = x^2 > |log x| > 1 across comparability classes
    CHECK(verify_log_compat(kLogExp, Series::monomial(E(0, -2)), Series::monomial(E(-1))));
}

TEST_CASE("sampled pairs over the log-exp rule all pass") {
    const HardyReport r = sample_report(kLogExp, kChain.window(-5, 5), 2000, 17);
    CHECK(r.h3prime.verdict == Verdict::Holds);
    CHECK(r.hfield.yes);
    CHECK(r.lhospital_samples.size() >= 2000);
    CHECK(r.logcompat_samples.size() >= 1900);
    for (const HardySample& s : r.lhospital_samples)
        CHECK(s.ok);
    for (const HardySample& s : r.logcompat_samples)
        CHECK(s.ok);
}

TEST_CASE("the tower rule fails h3prime and produces failing samples") {
    const DerivationSchema bad = adversarial(0, 6);
    const HardyReport r = sample_report(bad, kChain.window(0, 4), 50, 23);
    REQUIRE(r.h3prime.verdict == Verdict::FailsWithWitness);
    CHECK(reconfirm_witness(bad, r.h3prime));
    bool failing_hd2 = false, failing_hd3 = false;
    for (const HardySample& s : r.lhospital_samples)
        failing_hd2 = failing_hd2 || !s.ok;
    for (const HardySample& s : r.logcompat_samples)
        failing_hd3 = failing_hd3 || !s.ok;
    CHECK(failing_hd2);
    // the witness-built pair psi^-1 vs phi breaks the biconditional
    REQUIRE(r.lhospital_samples.size() >= 2);
    const HardySample& built = r.lhospital_samples[r.lhospital_samples.size() - 2];
    CHECK(!built.ok);
}

TEST_CASE("H-field positivity") {
    CHECK(check_hfield(kLogExp, kChain.window(-6, 6)).yes);
    std::map<Rational, Series> table = {
        {0, Series::constant(1)},
        {1, Series::monomial(-2, E(0))},
    };
    const DerivationSchema mixed = DerivationSchema::explicit_table(kChain, table);
    const HFieldResult r = check_hfield(mixed, kChain.window(0, 1));
    CHECK(!r.yes);
    REQUIRE(r.witness);
    CHECK(*r.witness == Fundamental(1));
}

TEST_CASE("constants are exactly the kernel") {
    RandomGen gen(kChain.window(-4, 4), 31);
    for (int i = 0; i < 500; ++i)
        CHECK(check_constants(kLogExp, gen.series()));
    CHECK(check_constants(kLogExp, Series::constant(Rational(-7, 2))));
    CHECK(check_constants(kLogExp, Series::zero()));
}
