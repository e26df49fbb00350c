#include "ghs/monomial.hpp"

#include <algorithm>

#include "ghs/errors.hpp"

namespace ghs {

Monomial Monomial::fundamental(Fundamental phi, Rational exponent) {
    Monomial m;
    if (exponent != 0) m.factors_.emplace_back(std::move(phi), std::move(exponent));
    return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first > b.first; });
    Monomial m;
    for (auto& [phi, e] : factors) {
        if (!m.factors_.empty() && m.factors_.back().first == phi)
            m.factors_.back().second += e;
        else
            m.factors_.emplace_back(phi, e);
        if (!m.factors_.empty() && m.factors_.back().second == 0) m.factors_.pop_back();
    }
    return m;
}

Rational Monomial::exponent_of(const Fundamental& phi) const {
    for (const auto& [f, e] : factors_)
        if (f == phi) return e;
    return 0;
}

Monomial mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto ia = a.factors_.begin(), ib = b.factors_.begin();
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
        if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first > ib->first)) {
            out.factors_.push_back(*ia++);
        } else if (ia == a.factors_.end() || ib->first > ia->first) {
            out.factors_.push_back(*ib++);
        } else {
            Rational e = ia->second + ib->second;
            if (e != 0) out.factors_.emplace_back(ia->first, std::move(e));
            ++ia, ++ib;
        }
    }
    return out;
}

Monomial Monomial::pow(const Rational& r) const {
    Monomial out;
    if (r == 0) return out;
    out.factors_.reserve(factors_.size());
    for (const auto& [phi, e] : factors_) out.factors_.emplace_back(phi, Rational(e * r));
    return out;
}

std::optional<Fundamental> Monomial::leading_fundamental() const {
    if (factors_.empty()) return std::nullopt;
    return factors_.front().first;
}

const Rational& Monomial::leading_exponent() const {
    if (factors_.empty()) throw domain_error("LE undefined for the identity monomial");
    return factors_.front().second;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    // alpha < beta iff LE(beta/alpha) > 0: locate the largest fundamental
    // where the exponents differ.
    auto ia = a.factors_.begin(), ib = b.factors_.begin();
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
        if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first > ib->first)) {
            return ia->second > 0 ? 1 : -1;
        }
        if (ia == a.factors_.end() || ib->first > ia->first) {
            return ib->second > 0 ? -1 : 1;
        }
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia, ++ib;
    }
    return 0;
}

std::pair<Monomial, int> Monomial::abs_sign() const {
    if (factors_.empty()) return {Monomial::one(), 1};
    if (factors_.front().second > 0) return {*this, 1};
    return {inverse(), -1};
}

} // namespace ghs
