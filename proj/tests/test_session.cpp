#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ghs/errors.hpp"
#include "ghs/session.hpp"
#include "ghs/text.hpp"

using namespace ghs;

namespace {

Session load(const std::string& text) {
    std::istringstream in(text);
    return load_session(in);
}

} // namespace

TEST_CASE("default session is the log-exp chain") {
    const Session s = default_session();
    CHECK(s.chain.kind() == ChainKind::IntegerIndexed);
    CHECK(s.schema.kind() == SchemaKind::LogExpChain);
    CHECK(s.budgets.invert == 8);
    CHECK(s.budgets.integrate == 6);
    CHECK(s.budgets.probe == 32);
    CHECK(s.chain.name(Fundamental(0)) == "x");
    CHECK(s.chain.name(Fundamental(-2)) == "E_-2");
}

TEST_CASE("explicit-table config over a finite chain") {
    const Session s = load(R"(# two-element chain
chain = finite_list
names = u, v
schema = explicit
d.u = u^-1
d.v = 2*u + 1
integrate_budget = 3
seed = 11
)");
    CHECK(s.chain.kind() == ChainKind::FiniteList);
    CHECK(s.schema.kind() == SchemaKind::ExplicitTable);
    CHECK(s.budgets.integrate == 3);
    CHECK(s.seed == 11);
    CHECK(s.schema.log_derivative(Fundamental(1)) ==
          Series::monomial(2, Monomial::fundamental(Fundamental(0))) +
              Series::constant(1));
}

TEST_CASE("shift-monomial and general-shift configs") {
    const Session shift = load(R"(chain = integer_indexed
schema = shift_monomial
alpha = 2, 1/2
t.E_3 = 5
)");
    CHECK(shift.schema.kind() == SchemaKind::ShiftMonomial);
    CHECK(shift.schema.log_derivative(Fundamental(3)).leading_coeff() == 5);

    const Session gs = load(R"(chain = integer_indexed
schema = general_shift
gamma = x^-1
term = 1 : 1
term = 1/2 : 2, 1
)");
    CHECK(gs.schema.kind() == SchemaKind::GeneralShift);
    CHECK(gs.schema.log_derivative(Fundamental(3)).terms().size() == 2);
}

TEST_CASE("rational chain with a real-indexed-power rule") {
    const Session s = load(R"(chain = rational_indexed
prefix = u_
zero_alias = u
least = 0
schema = real_indexed_power
beta = -1/2
)");
    CHECK(s.chain.kind() == ChainKind::RationalIndexed);
    CHECK(s.schema.kind() == SchemaKind::RealIndexedPower);
    CHECK(s.schema.log_derivative(Fundamental(Rational(1, 2))).is_constant());
}

TEST_CASE("config errors") {
    CHECK_THROWS_AS(load("chain = pringle\n"), config_error);
    CHECK_THROWS_AS(load("wibble = 3\n"), config_error);
    CHECK_THROWS_AS(load("chain = finite_list\nnames = u\nschema = explicit\nd.w = 1\n"),
                    config_error);
    CHECK_THROWS_AS(load("probe = -2\n"), config_error);
    CHECK_THROWS_AS(load("seed = 1\nseed = 2\n"), config_error);
    CHECK_THROWS_AS(load("just a line\n"), config_error);
    CHECK_THROWS_AS(load("chain = finite_list\nnames = u, v\n"), config_error);
    CHECK_THROWS_AS(load("schema = shift_monomial\nalpha = -1\n"), config_error);
    CHECK_THROWS_AS(load("chain = finite_list\nnames = u\nschema = explicit\nd.u = ???\n"),
                    config_error);
    CHECK_THROWS_AS(load_session_file("/nonexistent/ghs.conf"), config_error);
}
