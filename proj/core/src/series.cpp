#include "ghs/series.hpp"

#include <algorithm>

#include "ghs/errors.hpp"

namespace ghs {

Series Series::constant(Rational c) {
    Series s;
    if (c != 0) s.terms_.push_back({std::move(c), Monomial::one()});
    return s;
}

Series Series::monomial(Rational c, Monomial m) {
    Series s;
    if (c != 0) s.terms_.push_back({std::move(c), std::move(m)});
    return s;
}

Series Series::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mon > b.mon; });
    Series s;
    for (auto& t : terms) {
        if (!s.terms_.empty() && s.terms_.back().mon == t.mon)
            s.terms_.back().coeff += t.coeff;
        else
            s.terms_.push_back(std::move(t));
        if (!s.terms_.empty() && s.terms_.back().coeff == 0) s.terms_.pop_back();
    }
    return s;
}

Series operator+(const Series& a, const Series& b) {
    Series out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->mon > ib->mon)) {
            out.terms_.push_back(*ia++);
        } else if (ia == a.terms_.end() || ib->mon > ia->mon) {
            out.terms_.push_back(*ib++);
        } else {
            Rational c = ia->coeff + ib->coeff;
            if (c != 0) out.terms_.push_back({std::move(c), ia->mon});
            ++ia, ++ib;
        }
    }
    return out;
}

Series operator-(const Series& a) {
    Series out = a;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
    std::vector<Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            products.push_back({Rational(ta.coeff * tb.coeff), mul(ta.mon, tb.mon)});
    return Series::from_terms(std::move(products));
}

Series Series::scaled(const Rational& c) const {
    if (c == 0) return {};
    Series out = *this;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

Series Series::invert(unsigned budget) const {
    if (terms_.empty()) throw division_by_zero("cannot invert the zero series");
    if (budget == 0) throw domain_error("invert budget must be >= 1");
    const Term& lt = terms_.front();
    Monomial lm_inv = lt.mon.inverse();
    Rational lc_inv = Rational(1) / lt.coeff;
    Series head_inv = Series::monomial(lc_inv, lm_inv);
    if (terms_.size() == 1) return head_inv; // single term: exact
    // a = LT (1 + eps); expand LT^-1 sum (-eps)^k.
    Series eps = (*this - Series::monomial(lt.coeff, lt.mon)) * head_inv;
    Series acc = Series::constant(1);
    Series power = Series::constant(1);
    Series neg_eps = -eps;
    for (unsigned k = 1; k < budget; ++k) {
        power = power * neg_eps;
        acc = acc + power;
    }
    Series partial = head_inv * acc;
    // Terms at or below LM(eps)^budget * LM(a)^-1 may differ from the true
    // inverse; prune them, then keep the leading `budget` terms.
    Monomial boundary = mul(eps.leading_monomial().pow(budget), lm_inv);
    std::vector<Term> kept;
    for (const auto& t : partial.terms_) {
        if (t.mon <= boundary) break;
        kept.push_back(t);
        if (kept.size() == budget) break;
    }
    Series out;
    out.terms_ = std::move(kept);
    return out;
}

const Monomial& Series::leading_monomial() const {
    if (terms_.empty()) throw domain_error("LM undefined for the zero series");
    return terms_.front().mon;
}

const Rational& Series::leading_coeff() const {
    if (terms_.empty()) throw domain_error("LC undefined for the zero series");
    return terms_.front().coeff;
}

const Term& Series::leading_term() const {
    if (terms_.empty()) throw domain_error("LT undefined for the zero series");
    return terms_.front();
}

int Series::dominance(const Series& a, const Series& b) {
    if (a.is_zero() && b.is_zero()) return 0;
    if (a.is_zero()) return -1;
    if (b.is_zero()) return 1;
    return Monomial::compare(a.leading_monomial(), b.leading_monomial());
}

bool Series::equivalent(const Series& a, const Series& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return a.leading_term() == b.leading_term();
}

SeriesDecomposition Series::decompose() const {
    SeriesDecomposition d;
    Monomial one = Monomial::one();
    for (const auto& t : terms_) {
        int c = Monomial::compare(t.mon, one);
        if (c > 0)
            d.infinite_part.terms_.push_back(t);
        else if (c == 0)
            d.constant_part = t.coeff;
        else
            d.infinitesimal_part.terms_.push_back(t);
    }
    return d;
}

} // namespace ghs
