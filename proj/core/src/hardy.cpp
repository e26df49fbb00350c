#include "ghs/hardy.hpp"

#include <utility>

#include "ghs/errors.hpp"
#include "ghs/random.hpp"

namespace ghs {

ConditionReport check_h3prime(const DerivationSchema& schema,
                              std::vector<Fundamental> window) {
    return check_condition(schema, Condition::H3Prime, std::move(window));
}

bool verify_lhospital(const DerivationSchema& schema, const Series& a, const Series& b) {
    if (a.is_zero() || b.is_zero())
        throw domain_error("l'Hospital operands must be nonzero");
    if (a.leading_monomial().is_one() || b.leading_monomial().is_one())
        throw domain_error("l'Hospital operands must not be asymptotic to 1");
    const Series da = schema.derive(a);
    const Series db = schema.derive(b);
    return (Series::dominance(a, b) <= 0) == (Series::dominance(da, db) <= 0);
}

bool verify_log_compat(const DerivationSchema& schema, const Series& a, const Series& b) {
    if (a.is_zero() || b.is_zero())
        throw domain_error("log-compatibility operands must be nonzero");
    const Monomial abs_a = a.leading_monomial().abs_sign().first;
    const Monomial abs_b = b.leading_monomial().abs_sign().first;
    if (!(abs_b > Monomial::one()) || !(abs_a > abs_b))
        throw domain_error("log-compatibility needs |a| > |b| > 1");

    const Series da = schema.derive(a);
    const Series db = schema.derive(b);
    if (da.is_zero() || db.is_zero())
        return false;
    // Compare LM(a'/a) against LM(b'/b) through the cross products
    // LM(a')*LM(b) vs LM(b')*LM(a); no series inversion is needed.
    const Monomial lhs = mul(da.leading_monomial(), b.leading_monomial());
    const Monomial rhs = mul(db.leading_monomial(), a.leading_monomial());
    const int cmp = Monomial::compare(lhs, rhs);
    if (cmp < 0)
        return false;
    const bool comparable = a.leading_monomial().leading_fundamental() ==
                            b.leading_monomial().leading_fundamental();
    return (cmp == 0) == comparable;
}

HFieldResult check_hfield(const DerivationSchema& schema,
                          const std::vector<Fundamental>& window) {
    for (const Fundamental& phi : window)
        if (sign(schema.log_derivative(phi).leading_coeff()) <= 0)
            return {false, phi};
    return {true, std::nullopt};
}

bool check_constants(const DerivationSchema& schema, const Series& a) {
    return schema.derive(a).is_zero() == a.is_constant();
}

HardyReport sample_report(const DerivationSchema& schema, std::vector<Fundamental> window,
                          std::size_t samples, std::uint64_t seed) {
    HardyReport report;
    report.h3prime = check_h3prime(schema, window);
    report.hfield = check_hfield(schema, window);

    RandomGen gen(window, seed);
    for (std::size_t i = 0; i < samples; ++i) {
        Series a = gen.nonunit_series();
        Series b = gen.nonunit_series();
        report.lhospital_samples.push_back({a, b, verify_lhospital(schema, a, b)});

        // Order a fresh pair by |LM| to meet the |a| > |b| > 1 precondition.
        for (int attempt = 0; attempt < 64; ++attempt) {
            Series u = gen.nonunit_series();
            Series v = gen.nonunit_series();
            const int cmp = Monomial::compare(u.leading_monomial().abs_sign().first,
                                              v.leading_monomial().abs_sign().first);
            if (cmp == 0)
                continue;
            if (cmp < 0)
                std::swap(u, v);
            report.logcompat_samples.push_back({u, v, verify_log_compat(schema, u, v)});
            break;
        }
    }

    // When the window criterion fails, probe the converse: pairs built from
    // the witness fundamentals frequently break the sampled properties too.
    if (report.h3prime.verdict == Verdict::FailsWithWitness && report.h3prime.witness &&
        report.h3prime.witness->phis.size() == 2) {
        const Fundamental& phi = report.h3prime.witness->phis[0];
        const Fundamental& psi = report.h3prime.witness->phis[1];
        const Series s_phi = Series::monomial(Monomial::fundamental(phi));
        const Series s_psi = Series::monomial(Monomial::fundamental(psi));
        const Series s_psi_inv = Series::monomial(Monomial::fundamental(psi, -1));
        report.lhospital_samples.push_back(
            {s_psi_inv, s_phi, verify_lhospital(schema, s_psi_inv, s_phi)});
        report.lhospital_samples.push_back(
            {s_phi, s_psi_inv, verify_lhospital(schema, s_phi, s_psi_inv)});
        report.logcompat_samples.push_back(
            {s_psi, s_phi, verify_log_compat(schema, s_psi, s_phi)});
    }
    return report;
}

} // namespace ghs
