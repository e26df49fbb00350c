#include "ghs/asympint.hpp"

#include <utility>

#include "ghs/errors.hpp"

namespace ghs {

ThetaInfo theta_info(const DerivationSchema& schema, const Fundamental& phi) {
    const Series ld = schema.log_derivative(phi);
    return {phi, ld.leading_monomial(), ld.leading_coeff()};
}

GlbResult theta_glb(const DerivationSchema& schema, unsigned probe_depth) {
    (void)probe_depth;
    const FundamentalChain& chain = schema.chain();
    if (chain.kind() == ChainKind::FiniteList) {
        std::optional<Monomial> best;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            Monomial theta = theta_info(schema, chain.at(static_cast<long>(i))).theta;
            if (!best || theta < *best)
                best = std::move(theta);
        }
        return {GlbKind::Attained, std::move(best)};
    }
    // Structural rules with strictly descending thetas along an unbounded
    // descending chain have no attained infimum in the monomial group.
    if (schema.kind() == SchemaKind::LogExpChain)
        return {GlbKind::NotInGamma, std::nullopt};
    if ((schema.kind() == SchemaKind::ShiftMonomial ||
         schema.kind() == SchemaKind::GeneralShift) &&
        !chain.has_least())
        return {GlbKind::NotInGamma, std::nullopt};
    return {GlbKind::Unknown, std::nullopt};
}

namespace {

/// First candidate of the case-3 downward search for LM(a) == 1, where no
/// leading fundamental marks a starting point.
Fundamental top_candidate(const FundamentalChain& chain, unsigned probe_depth) {
    if (chain.kind() == ChainKind::FiniteList)
        return chain.at(static_cast<long>(chain.size()) - 1);
    return Fundamental(static_cast<long>(probe_depth));
}

/// Walks the chain downward from `start` looking for c with
/// LF(alpha / theta^(c)) == c, the shape integrable in closed form.
std::optional<std::pair<ThetaInfo, Monomial>>
descend_for_match(const DerivationSchema& schema, const Monomial& alpha,
                  Fundamental start, unsigned probe_depth) {
    std::optional<Fundamental> c = start;
    for (unsigned step = 0; c && step < probe_depth; ++step) {
        ThetaInfo ti = theta_info(schema, *c);
        Monomial q = mul(alpha, ti.theta.inverse());
        const auto lf = q.leading_fundamental();
        if (lf && *lf == *c)
            return std::make_pair(std::move(ti), std::move(q));
        c = schema.chain().predecessor(*c);
    }
    return std::nullopt;
}

} // namespace

Series asymptotic_integral(const DerivationSchema& schema, const Series& a,
                           unsigned probe_depth) {
    if (a.is_zero())
        throw domain_error("the zero series has no leading term to integrate");
    const Monomial& alpha = a.leading_monomial();
    const Rational& c = a.leading_coeff();

    const GlbResult glb = theta_glb(schema, probe_depth);
    if (glb.kind == GlbKind::Attained && alpha == *glb.theta)
        throw no_asymptotic_integral("leading monomial is asymptotic to the attained "
                                     "infimum of the logarithmic derivatives");

    const auto phi0 = alpha.leading_fundamental();
    if (phi0) {
        const ThetaInfo ti0 = theta_info(schema, *phi0);
        const auto lf_theta0 = ti0.theta.leading_fundamental();
        if (lf_theta0 && *lf_theta0 > *phi0) {
            // Case 2: theta^(phi0) towers above phi0; integrate against the
            // rule of that higher fundamental phi1 = LF(theta^(phi0)).
            const ThetaInfo ti1 = theta_info(schema, *lf_theta0);
            const Rational denom(-ti1.F * ti0.theta.exponent_of(*lf_theta0));
            return Series::monomial(Rational(c / denom), mul(alpha, ti1.theta.inverse()));
        }
        Monomial q = mul(alpha, ti0.theta.inverse());
        const auto lf_q = q.leading_fundamental();
        if (lf_q && *lf_q == *phi0) {
            // Case 1: power-rule shape at phi0 itself.
            const Rational denom(ti0.F * q.exponent_of(*phi0));
            return Series::monomial(Rational(c / denom), std::move(q));
        }
        // Case 3: the phi0 exponents cancel; descend to a lower fundamental
        // whose rule matches.
        if (auto pred = schema.chain().predecessor(*phi0)) {
            if (auto hit = descend_for_match(schema, alpha, *pred, probe_depth)) {
                const Rational denom(hit->first.F *
                                     hit->second.exponent_of(hit->first.phi));
                return Series::monomial(Rational(c / denom), std::move(hit->second));
            }
        }
        throw search_exhausted("no matching fundamental below " +
                               schema.chain().name(*phi0) + " within the probe depth");
    }

    // alpha == 1: pure case-3 descent from the top of the probed range.
    if (auto hit = descend_for_match(schema, alpha, top_candidate(schema.chain(), probe_depth),
                                     2 * probe_depth + 1)) {
        const Rational denom(hit->first.F * hit->second.exponent_of(hit->first.phi));
        return Series::monomial(Rational(c / denom), std::move(hit->second));
    }
    throw search_exhausted("no matching fundamental for a constant leading term "
                           "within the probe depth");
}

Monomial rosenlicht_u0(const DerivationSchema& schema, const Monomial& alpha,
                       unsigned probe_depth) {
    if (alpha.is_one())
        throw domain_error("the identity monomial has no Rosenlicht u0");
    const Monomial m = alpha.abs_sign().first;
    const FundamentalChain& chain = schema.chain();

    Fundamental start = *m.leading_fundamental();
    if (chain.kind() == ChainKind::FiniteList) {
        start = chain.at(static_cast<long>(chain.size()) - 1);
    } else {
        Rational top(start.index() + static_cast<long>(probe_depth));
        if (chain.contains(top))
            start = Fundamental(std::move(top));
    }

    std::optional<Fundamental> c = start;
    for (unsigned step = 0; c && step < 2 * probe_depth + 1; ++step) {
        const ThetaInfo ti = theta_info(schema, *c);
        if (ti.theta < m) {
            const Monomial u1 = Monomial::fundamental(*c);
            const Monomial other = mul(m, ti.theta.inverse());
            return u1 < other ? u1 : other;
        }
        c = chain.predecessor(*c);
    }
    throw search_exhausted("no fundamental with logarithmic derivative below the "
                           "monomial within the probe depth");
}

IntegrationResult integrate(const DerivationSchema& schema, const Series& a,
                            unsigned budget, unsigned probe_depth) {
    if (a.is_zero())
        throw domain_error("integrand must be nonzero");
    IntegrationResult result;
    result.residual = a;
    while (!result.residual.is_zero() && result.steps_used < budget) {
        const Series b = asymptotic_integral(schema, result.residual, probe_depth);
        const Series next(result.residual - schema.derive(b));
        if (!next.is_zero() && Series::dominance(next, result.residual) >= 0)
            throw domain_error("residual failed to descend; the rule does not "
                               "integrate this term");
        result.antiderivative = result.antiderivative + b;
        result.residual = next;
        ++result.steps_used;
    }
    result.exact = result.residual.is_zero();
    return result;
}

} // namespace ghs
