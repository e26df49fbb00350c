#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ghs/chain.hpp"
#include "ghs/rational.hpp"

namespace ghs {

/// Element of the finitely-supported Hahn group over the fundamental chain:
/// a finite exponent map, stored with fundamentals strictly descending and
/// no zero exponents. The empty map is the identity monomial 1.
///
/// Ordering is anti-lexicographic: alpha < beta iff the exponent of the
/// largest fundamental where they differ is larger in beta.
class Monomial {
public:
    using Factor = std::pair<Fundamental, Rational>;

    Monomial() = default; // identity

    static Monomial one() { return {}; }
    static Monomial fundamental(Fundamental phi, Rational exponent = 1);
    /// Normalizes an arbitrary factor list (sorts, fuses, drops zeros).
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }

    /// Exponent of phi, 0 when absent.
    Rational exponent_of(const Fundamental& phi) const;

    friend Monomial mul(const Monomial& a, const Monomial& b);
    Monomial pow(const Rational& r) const;
    Monomial inverse() const { return pow(-1); }

    /// max(supp), nullopt for the identity (the distinguished value "One").
    std::optional<Fundamental> leading_fundamental() const;
    /// Exponent of the leading fundamental; domain_error on the identity.
    const Rational& leading_exponent() const;

    /// -1, 0, +1 for a < b, a == b, a > b in the anti-lexicographic order.
    static int compare(const Monomial& a, const Monomial& b);

    /// (|alpha|, sign). sign(1) is +1 by convention so the map is total.
    std::pair<Monomial, int> abs_sign() const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }
    friend bool operator>(const Monomial& a, const Monomial& b) { return compare(a, b) > 0; }
    friend bool operator<=(const Monomial& a, const Monomial& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const Monomial& a, const Monomial& b) { return compare(a, b) >= 0; }

private:
    std::vector<Factor> factors_; // descending by fundamental, exponents nonzero
};

} // namespace ghs
