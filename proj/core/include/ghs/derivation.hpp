#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ghs/chain.hpp"
#include "ghs/series.hpp"

namespace ghs {

enum class SchemaKind {
    ExplicitTable,
    LogExpChain,
    ShiftMonomial,
    RealIndexedPower,
    GeneralShift,
};

/// One support term t_tau * prod_n s^{n+1}(phi)^{tau_n} of a GeneralShift rule.
struct GeneralShiftTerm {
    Rational coeff;                  // t_tau, nonzero
    std::vector<Rational> exponents; // tau_0, tau_1, ... (leading one positive)
};

/// Rule assigning to each fundamental phi the logarithmic derivative
/// phi'/phi as a nonzero series. Immutable once built.
class DerivationSchema {
public:
    static DerivationSchema explicit_table(FundamentalChain chain,
                                           std::map<Rational, Series> table);
    static DerivationSchema log_exp(FundamentalChain chain);
    static DerivationSchema shift_monomial(FundamentalChain chain,
                                           std::vector<Rational> alphas,
                                           std::map<Rational, Rational> t = {});
    static DerivationSchema real_indexed_power(FundamentalChain chain, Rational beta,
                                               std::map<Rational, Rational> t = {});
    static DerivationSchema general_shift(FundamentalChain chain, Monomial gamma,
                                          std::vector<GeneralShiftTerm> support);

    SchemaKind kind() const noexcept { return kind_; }
    const FundamentalChain& chain() const noexcept { return chain_; }

    /// phi'/phi per the schema rule. Never zero.
    Series log_derivative(const Fundamental& phi) const;

    /// Strong Leibniz rule: alpha' = alpha * sum_phi alpha_phi * phi'/phi.
    Series derive_monomial(const Monomial& alpha) const;

    /// Strong linearity: a' = sum a_alpha * alpha'.
    Series derive(const Series& a) const;

    /// Descending enumeration of Supp(phi'/phi).
    std::vector<Monomial> support_of_log_derivative(const Fundamental& phi) const;

    /// 0-based position of tau in the descending enumeration of
    /// Supp(phi'/phi); domain_error when absent.
    std::size_t position(const Fundamental& phi, const Monomial& tau) const;

    /// The order isomorphism I_{mu,nu} between supports of logarithmic
    /// derivatives, matching by position from the top. domain_error when tau
    /// is not in Supp(mu'/mu) or its position exceeds the matched segment.
    Monomial support_isomorphism(const Fundamental& mu, const Fundamental& nu,
                                 const Monomial& tau) const;

    /// Whether the matched segment of I_{mu,nu} moves every element
    /// strictly downward.
    bool is_left_shift(const Fundamental& mu, const Fundamental& nu) const;

private:
    DerivationSchema() = default;

    SchemaKind kind_ = SchemaKind::LogExpChain;
    FundamentalChain chain_ = FundamentalChain::integer_indexed();
    std::map<Rational, Series> table_;      // ExplicitTable
    std::vector<Rational> alphas_;          // ShiftMonomial
    std::map<Rational, Rational> t_;        // ShiftMonomial / RealIndexedPower overrides
    Rational beta_;                         // RealIndexedPower
    Monomial gamma_;                        // GeneralShift
    std::vector<GeneralShiftTerm> support_; // GeneralShift
};

enum class Condition { H1Prime, H1DoublePrime, H2DoublePrime, H3Prime };
enum class Verdict { Holds, FailsWithWitness, UnknownAtDepth };

/// Concrete, independently re-checkable failure data: the fundamentals and
/// support monomials that realize the violated clause.
struct ConditionWitness {
    std::vector<Fundamental> phis;
    std::vector<Monomial> taus;
    std::string note;
};

struct ConditionReport {
    Condition condition;
    std::vector<Fundamental> window;
    Verdict verdict = Verdict::Holds;
    std::optional<ConditionWitness> witness;
    /// H1': E_1 cap window; H2'': E_2 cap window. Empty for the other
    /// conditions.
    std::vector<Fundamental> exceptional_set;
    bool window_relative = false; // Holds certified only at window scale
};

std::string to_string(Condition c);
std::string to_string(Verdict v);
std::optional<Condition> parse_condition(std::string_view name);

/// Finite-window checker for the summability criteria. Windows must be
/// pairwise distinct and sorted: descending for H1'', ascending for H2''
/// and H3', either direction for H1'.
ConditionReport check_condition(const DerivationSchema& schema, Condition condition,
                                std::vector<Fundamental> window);

/// Re-validates a FailsWithWitness report directly against the schema's
/// defining data, independent of the scan that produced it.
bool reconfirm_witness(const DerivationSchema& schema, const ConditionReport& report);

} // namespace ghs
