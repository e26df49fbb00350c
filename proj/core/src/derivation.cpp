#include "ghs/derivation.hpp"

#include <algorithm>
#include <utility>

#include "ghs/errors.hpp"

namespace ghs {

namespace {

Rational lookup_or(const std::map<Rational, Rational>& m, const Rational& key,
                   const Rational& fallback) {
    auto it = m.find(key);
    return it == m.end() ? fallback : it->second;
}

} // namespace

DerivationSchema DerivationSchema::explicit_table(FundamentalChain chain,
                                                  std::map<Rational, Series> table) {
    for (const auto& [index, value] : table) {
        if (!chain.contains(index))
            throw schema_domain_error("explicit table key is not a chain index");
        if (value.is_zero())
            throw schema_domain_error("logarithmic derivative must be nonzero");
    }
    DerivationSchema s;
    s.kind_ = SchemaKind::ExplicitTable;
    s.chain_ = std::move(chain);
    s.table_ = std::move(table);
    return s;
}

DerivationSchema DerivationSchema::log_exp(FundamentalChain chain) {
    if (chain.kind() != ChainKind::IntegerIndexed)
        throw schema_domain_error("log-exp rule needs an integer-indexed chain");
    DerivationSchema s;
    s.kind_ = SchemaKind::LogExpChain;
    s.chain_ = std::move(chain);
    return s;
}

DerivationSchema DerivationSchema::shift_monomial(FundamentalChain chain,
                                                  std::vector<Rational> alphas,
                                                  std::map<Rational, Rational> t) {
    if (!chain.has_shift())
        throw schema_domain_error("shift-monomial rule needs a chain with shift");
    if (alphas.empty() || sign(alphas.front()) <= 0)
        throw schema_domain_error("shift-monomial exponents need a positive leading entry");
    for (const auto& [index, coeff] : t)
        if (coeff == 0)
            throw schema_domain_error("shift-monomial coefficient must be nonzero");
    DerivationSchema s;
    s.kind_ = SchemaKind::ShiftMonomial;
    s.chain_ = std::move(chain);
    s.alphas_ = std::move(alphas);
    s.t_ = std::move(t);
    return s;
}

DerivationSchema DerivationSchema::real_indexed_power(FundamentalChain chain, Rational beta,
                                                      std::map<Rational, Rational> t) {
    if (!chain.has_least())
        throw schema_domain_error("real-indexed-power rule needs a least element");
    for (const auto& [index, coeff] : t)
        if (coeff == 0)
            throw schema_domain_error("real-indexed-power coefficient must be nonzero");
    DerivationSchema s;
    s.kind_ = SchemaKind::RealIndexedPower;
    s.chain_ = std::move(chain);
    s.beta_ = std::move(beta);
    s.t_ = std::move(t);
    return s;
}

DerivationSchema DerivationSchema::general_shift(FundamentalChain chain, Monomial gamma,
                                                 std::vector<GeneralShiftTerm> support) {
    if (!chain.has_shift() || chain.has_least())
        throw schema_domain_error("general-shift rule needs a shift without a least element");
    if (support.empty())
        throw schema_domain_error("general-shift support must be nonempty");
    for (const auto& term : support) {
        if (term.coeff == 0)
            throw schema_domain_error("general-shift coefficient must be nonzero");
        if (term.exponents.empty() || sign(term.exponents.front()) <= 0)
            throw schema_domain_error("general-shift exponents need a positive leading entry");
    }
    DerivationSchema s;
    s.kind_ = SchemaKind::GeneralShift;
    s.chain_ = std::move(chain);
    s.gamma_ = std::move(gamma);
    s.support_ = std::move(support);
    return s;
}

Series DerivationSchema::log_derivative(const Fundamental& phi) const {
    if (!chain_.contains(phi.index()))
        throw schema_domain_error("fundamental is not on the chain");
    switch (kind_) {
    case SchemaKind::ExplicitTable: {
        auto it = table_.find(phi.index());
        if (it == table_.end())
            throw schema_domain_error("no rule for " + chain_.name(phi));
        return it->second;
    }
    case SchemaKind::LogExpChain: {
        const long n = static_cast<long>(numerator(phi.index()));
        std::vector<Monomial::Factor> factors;
        if (n >= 2) {
            for (long k = 1; k <= n - 1; ++k)
                factors.emplace_back(Fundamental(k), 1);
        } else if (n <= 0) {
            for (long k = n; k <= 0; ++k)
                factors.emplace_back(Fundamental(k), -1);
        }
        return Series::monomial(Monomial::from_factors(std::move(factors)));
    }
    case SchemaKind::ShiftMonomial: {
        const Rational t = lookup_or(t_, phi.index(), 1);
        if (chain_.has_least() && phi == chain_.least())
            return Series::constant(t);
        std::vector<Monomial::Factor> factors;
        Fundamental cur = phi;
        for (const Rational& a : alphas_) {
            cur = chain_.shift(cur);
            factors.emplace_back(cur, a);
        }
        return Series::monomial(t, Monomial::from_factors(std::move(factors)));
    }
    case SchemaKind::RealIndexedPower: {
        const Rational t = lookup_or(t_, phi.index(), 1);
        const Rational exponent = phi.index() + beta_;
        return Series::monomial(t, Monomial::fundamental(chain_.least(), exponent));
    }
    case SchemaKind::GeneralShift: {
        std::vector<Term> terms;
        for (const auto& st : support_) {
            std::vector<Monomial::Factor> factors;
            Fundamental cur = chain_.shift(phi);
            for (const Rational& e : st.exponents) {
                factors.emplace_back(cur, e);
                cur = chain_.shift(cur);
            }
            terms.push_back({st.coeff, mul(gamma_, Monomial::from_factors(std::move(factors)))});
        }
        return Series::from_terms(std::move(terms));
    }
    }
    throw schema_domain_error("unreachable schema kind");
}

Series DerivationSchema::derive_monomial(const Monomial& alpha) const {
    Series sum;
    for (const auto& [phi, exponent] : alpha.factors())
        sum = sum + log_derivative(phi).scaled(exponent);
    return Series::monomial(alpha) * sum;
}

Series DerivationSchema::derive(const Series& a) const {
    Series out;
    for (const Term& t : a.terms())
        out = out + derive_monomial(t.mon).scaled(t.coeff);
    return out;
}

std::vector<Monomial> DerivationSchema::support_of_log_derivative(const Fundamental& phi) const {
    const Series ld = log_derivative(phi);
    std::vector<Monomial> supp;
    supp.reserve(ld.terms().size());
    for (const Term& t : ld.terms())
        supp.push_back(t.mon);
    return supp;
}

std::size_t DerivationSchema::position(const Fundamental& phi, const Monomial& tau) const {
    const auto supp = support_of_log_derivative(phi);
    for (std::size_t i = 0; i < supp.size(); ++i)
        if (supp[i] == tau)
            return i;
    throw domain_error("monomial is not in the support of " + chain_.name(phi) + "'/" +
                       chain_.name(phi));
}

Monomial DerivationSchema::support_isomorphism(const Fundamental& mu, const Fundamental& nu,
                                               const Monomial& tau) const {
    const std::size_t p = position(mu, tau);
    const auto target = support_of_log_derivative(nu);
    if (p >= target.size())
        throw domain_error("position is beyond the matched segment of the supports");
    return target[p];
}

bool DerivationSchema::is_left_shift(const Fundamental& mu, const Fundamental& nu) const {
    const auto source = support_of_log_derivative(mu);
    const auto target = support_of_log_derivative(nu);
    const std::size_t matched = std::min(source.size(), target.size());
    for (std::size_t i = 0; i < matched; ++i)
        if (!(target[i] < source[i]))
            return false;
    return true;
}

std::string to_string(Condition c) {
    switch (c) {
    case Condition::H1Prime: return "h1prime";
    case Condition::H1DoublePrime: return "h1doubleprime";
    case Condition::H2DoublePrime: return "h2doubleprime";
    case Condition::H3Prime: return "h3prime";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::FailsWithWitness: return "FailsWithWitness";
    case Verdict::UnknownAtDepth: return "UnknownAtDepth";
    }
    return "?";
}

std::optional<Condition> parse_condition(std::string_view name) {
    if (name == "h1prime" || name == "h1'") return Condition::H1Prime;
    if (name == "h1doubleprime" || name == "h1''") return Condition::H1DoublePrime;
    if (name == "h2doubleprime" || name == "h2''") return Condition::H2DoublePrime;
    if (name == "h3prime" || name == "h3'") return Condition::H3Prime;
    return std::nullopt;
}

namespace {

enum class Direction { Ascending, Descending };

Direction validate_window(const FundamentalChain& chain, Condition condition,
                          const std::vector<Fundamental>& window) {
    if (window.empty())
        throw window_error("window must be nonempty");
    for (const Fundamental& phi : window)
        if (!chain.contains(phi.index()))
            throw window_error("window element is not on the chain");
    bool asc = true, desc = true;
    for (std::size_t i = 1; i < window.size(); ++i) {
        if (!(window[i - 1] < window[i])) asc = false;
        if (!(window[i] < window[i - 1])) desc = false;
    }
    if (window.size() == 1) desc = true;
    if (!asc && !desc)
        throw window_error("window must be strictly sorted");
    switch (condition) {
    case Condition::H1DoublePrime:
        if (!desc) throw window_error("window must be descending for h1doubleprime");
        return Direction::Descending;
    case Condition::H2DoublePrime:
    case Condition::H3Prime:
        if (!asc) throw window_error("window must be ascending for " + to_string(condition));
        return Direction::Ascending;
    case Condition::H1Prime:
        return asc ? Direction::Ascending : Direction::Descending;
    }
    throw window_error("unreachable condition");
}

/// Verdict for a scan that found no violation: schema kinds with a uniform
/// structural rule extend a clean window to every window, and a finite chain
/// fully contained in the window is checked exhaustively; an explicit table
/// over an infinite chain stays open.
void settle_clean_scan(const DerivationSchema& schema, ConditionReport& report) {
    if (schema.kind() != SchemaKind::ExplicitTable) {
        report.verdict = Verdict::Holds;
        report.window_relative = false;
        return;
    }
    if (schema.chain().kind() == ChainKind::FiniteList) {
        report.verdict = Verdict::Holds;
        report.window_relative = report.window.size() != schema.chain().size();
        return;
    }
    report.verdict = Verdict::UnknownAtDepth;
    report.window_relative = true;
}

std::optional<Fundamental> leading_fundamental_of_ratio(const Monomial& a, const Monomial& b) {
    return mul(a, b.inverse()).leading_fundamental();
}

} // namespace

ConditionReport check_condition(const DerivationSchema& schema, Condition condition,
                                std::vector<Fundamental> window) {
    const Direction dir = validate_window(schema.chain(), condition, window);
    ConditionReport report;
    report.condition = condition;
    report.window = window;

    std::vector<Fundamental> asc = window;
    if (dir == Direction::Descending)
        std::reverse(asc.begin(), asc.end());

    switch (condition) {
    case Condition::H1Prime: {
        // E_1 within the window: phi with some larger psi whose support map
        // onto phi is not a left shift.
        for (std::size_t i = 0; i < asc.size(); ++i) {
            for (std::size_t j = i + 1; j < asc.size(); ++j) {
                if (schema.is_left_shift(asc[j], asc[i]))
                    continue;
                report.exceptional_set.push_back(asc[i]);
                if (!report.witness) {
                    const auto source = schema.support_of_log_derivative(asc[j]);
                    const auto target = schema.support_of_log_derivative(asc[i]);
                    const std::size_t matched = std::min(source.size(), target.size());
                    ConditionWitness w;
                    w.phis = {asc[i], asc[j]};
                    for (std::size_t k = 0; k < matched; ++k) {
                        if (!(target[k] < source[k])) {
                            w.taus = {source[k], target[k]};
                            break;
                        }
                    }
                    w.note = "support map from " + schema.chain().name(asc[j]) + " onto " +
                             schema.chain().name(asc[i]) + " is not a left shift";
                    report.witness = std::move(w);
                }
                break;
            }
        }
        if (report.exceptional_set.empty()) {
            settle_clean_scan(schema, report);
        } else {
            report.verdict = Verdict::FailsWithWitness;
            report.window_relative = true;
        }
        return report;
    }
    case Condition::H1DoublePrime: {
        // Looks for one pair, higher before lower, whose support map is a
        // left shift; a window with no such pair is a counterexample chain.
        for (std::size_t i = 0; i < window.size(); ++i)
            for (std::size_t j = i + 1; j < window.size(); ++j)
                if (schema.is_left_shift(window[i], window[j])) {
                    report.verdict = Verdict::Holds;
                    report.window_relative = schema.kind() == SchemaKind::ExplicitTable &&
                                             schema.chain().kind() != ChainKind::FiniteList;
                    return report;
                }
        ConditionWitness w;
        w.phis = window;
        w.note = "no pair of the descending window maps by a left shift";
        report.witness = std::move(w);
        report.verdict = Verdict::FailsWithWitness;
        report.window_relative = true;
        return report;
    }
    case Condition::H2DoublePrime: {
        // E_2 within the window: psi with some smaller phi and support
        // monomials tau_phi, tau_psi such that LF(tau_phi/tau_psi) >= psi.
        for (std::size_t j = 0; j < asc.size(); ++j) {
            bool exceptional = false;
            for (std::size_t i = 0; i < j && !exceptional; ++i) {
                const auto supp_phi = schema.support_of_log_derivative(asc[i]);
                const auto supp_psi = schema.support_of_log_derivative(asc[j]);
                for (const Monomial& tau_phi : supp_phi) {
                    for (const Monomial& tau_psi : supp_psi) {
                        const auto lf = leading_fundamental_of_ratio(tau_phi, tau_psi);
                        if (lf && *lf >= asc[j]) {
                            exceptional = true;
                            if (!report.witness) {
                                ConditionWitness w;
                                w.phis = {asc[j], asc[i]};
                                w.taus = {tau_phi, tau_psi};
                                w.note = "LF(tau_phi/tau_psi) >= " + schema.chain().name(asc[j]);
                                report.witness = std::move(w);
                            }
                            break;
                        }
                    }
                    if (exceptional) break;
                }
            }
            if (exceptional)
                report.exceptional_set.push_back(asc[j]);
        }
        if (report.exceptional_set.empty()) {
            settle_clean_scan(schema, report);
        } else {
            report.verdict = Verdict::FailsWithWitness;
            report.window_relative = true;
        }
        return report;
    }
    case Condition::H3Prime: {
        for (std::size_t i = 0; i < asc.size(); ++i) {
            for (std::size_t j = i + 1; j < asc.size(); ++j) {
                const Monomial theta_lo = schema.log_derivative(asc[i]).leading_monomial();
                const Monomial theta_hi = schema.log_derivative(asc[j]).leading_monomial();
                const bool ordered = theta_lo < theta_hi;
                const auto lf = leading_fundamental_of_ratio(theta_lo, theta_hi);
                const bool small_gap = !lf || *lf < asc[j];
                if (ordered && small_gap)
                    continue;
                ConditionWitness w;
                w.phis = {asc[i], asc[j]};
                w.taus = {theta_lo, theta_hi};
                w.note = ordered ? "LF(theta_lo/theta_hi) is not below " +
                                       schema.chain().name(asc[j])
                                 : "leading monomials of the logarithmic derivatives are "
                                   "not strictly increasing";
                report.witness = std::move(w);
                report.verdict = Verdict::FailsWithWitness;
                report.window_relative = true;
                return report;
            }
        }
        settle_clean_scan(schema, report);
        return report;
    }
    }
    throw window_error("unreachable condition");
}

bool reconfirm_witness(const DerivationSchema& schema, const ConditionReport& report) {
    if (report.verdict != Verdict::FailsWithWitness || !report.witness)
        return false;
    const ConditionWitness& w = *report.witness;
    switch (report.condition) {
    case Condition::H1Prime: {
        if (w.phis.size() != 2) return false;
        const Fundamental& phi = w.phis[0];
        const Fundamental& psi = w.phis[1];
        if (!(phi < psi) || schema.is_left_shift(psi, phi))
            return false;
        if (w.taus.size() == 2) {
            const Monomial image = schema.support_isomorphism(psi, phi, w.taus[0]);
            if (image != w.taus[1] || image < w.taus[0])
                return false;
        }
        return std::find(report.exceptional_set.begin(), report.exceptional_set.end(), phi) !=
               report.exceptional_set.end();
    }
    case Condition::H1DoublePrime: {
        for (std::size_t i = 0; i < report.window.size(); ++i)
            for (std::size_t j = i + 1; j < report.window.size(); ++j)
                if (schema.is_left_shift(report.window[i], report.window[j]))
                    return false;
        return true;
    }
    case Condition::H2DoublePrime: {
        if (w.phis.size() != 2 || w.taus.size() != 2) return false;
        const Fundamental& psi = w.phis[0];
        const Fundamental& phi = w.phis[1];
        if (!(phi < psi)) return false;
        const auto supp_phi = schema.support_of_log_derivative(phi);
        const auto supp_psi = schema.support_of_log_derivative(psi);
        if (std::find(supp_phi.begin(), supp_phi.end(), w.taus[0]) == supp_phi.end())
            return false;
        if (std::find(supp_psi.begin(), supp_psi.end(), w.taus[1]) == supp_psi.end())
            return false;
        const auto lf = mul(w.taus[0], w.taus[1].inverse()).leading_fundamental();
        if (!lf || *lf < psi)
            return false;
        return std::find(report.exceptional_set.begin(), report.exceptional_set.end(), psi) !=
               report.exceptional_set.end();
    }
    case Condition::H3Prime: {
        if (w.phis.size() != 2 || w.taus.size() != 2) return false;
        const Fundamental& phi = w.phis[0];
        const Fundamental& psi = w.phis[1];
        if (!(phi < psi)) return false;
        const Monomial theta_lo = schema.log_derivative(phi).leading_monomial();
        const Monomial theta_hi = schema.log_derivative(psi).leading_monomial();
        if (theta_lo != w.taus[0] || theta_hi != w.taus[1])
            return false;
        const auto lf = mul(theta_lo, theta_hi.inverse()).leading_fundamental();
        const bool clause = theta_lo < theta_hi && (!lf || *lf < psi);
        return !clause;
    }
    }
    return false;
}

} // namespace ghs
