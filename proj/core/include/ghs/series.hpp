#pragma once

#include <vector>

#include "ghs/monomial.hpp"
#include "ghs/rational.hpp"

namespace ghs {

struct Term {
    Rational coeff; // nonzero
    Monomial mon;

    friend bool operator==(const Term& a, const Term& b) {
        return a.coeff == b.coeff && a.mon == b.mon;
    }
};

struct SeriesDecomposition;

/// Finitely-supported generalised series: a term list with strictly
/// decreasing monomials and nonzero rational coefficients. The zero series
/// has an empty list. Structural equality coincides with mathematical
/// equality; every operation returns this canonical form.
class Series {
public:
    Series() = default; // zero

    static Series zero() { return {}; }
    static Series constant(Rational c);
    static Series monomial(Rational c, Monomial m);
    static Series monomial(Monomial m) { return monomial(1, std::move(m)); }
    /// Normalizes an arbitrary term list (sorts, fuses duplicates, drops zeros).
    static Series from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one());
    }

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    Series scaled(const Rational& c) const;

    /// Truncated inverse: writes a = LT(a)(1 + eps) with eps < 1 and returns
    /// the partial geometric expansion LT(a)^-1 sum_{k<budget} (-eps)^k,
    /// pruned of any term at or below LM(eps)^budget / LM(a) so that the
    /// retained terms are genuine leading terms of a^-1. Exact when eps = 0
    /// or the expansion terminates within the budget.
    Series invert(unsigned budget) const;

    const Monomial& leading_monomial() const; // throws domain_error on 0
    const Rational& leading_coeff() const;    // throws domain_error on 0
    const Term& leading_term() const;         // throws domain_error on 0

    /// Dominance comparison by leading monomials, with LM(0) below every
    /// monomial: -1 for a < b, 0 for a =< b =< a (asymptotic), +1 for a > b.
    static int dominance(const Series& a, const Series& b);
    /// Equal leading terms (both zero counts as equivalent).
    static bool equivalent(const Series& a, const Series& b);

    /// Total ordering by leading-coefficient sign: a <= 0 iff LC(a) <= 0.
    int sign() const { return terms_.empty() ? 0 : ghs::sign(terms_[0].coeff); }

    SeriesDecomposition decompose() const;

    friend bool operator==(const Series& a, const Series& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    std::vector<Term> terms_;
};

/// Exact splitting a = infinite_part + constant_part + infinitesimal_part
/// with supports > 1, = 1, < 1 respectively.
struct SeriesDecomposition {
    Series infinite_part;
    Rational constant_part;
    Series infinitesimal_part;
};

} // namespace ghs
