#include "ghs/text.hpp"

#include <algorithm>
#include <cctype>

#include "ghs/errors.hpp"

namespace ghs {

namespace {

bool print_before(const Fundamental& a, const Fundamental& b) {
    const Rational& x = a.index();
    const Rational& y = b.index();
    const Rational ax(x < 0 ? Rational(-x) : x);
    const Rational ay(y < 0 ? Rational(-y) : y);
    if (ax != ay)
        return ax < ay;
    return x > y; // same distance from 0: the nonnegative index first
}

std::string factor_string(const Monomial::Factor& f, const FundamentalChain& chain) {
    std::string out = chain.name(f.first);
    if (f.second != 1) {
        out += '^';
        out += to_string(f.second);
    }
    return out;
}

} // namespace

std::string to_string(const Monomial& m, const FundamentalChain& chain) {
    if (m.is_one())
        return "1";
    std::vector<Monomial::Factor> factors = m.factors();
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return print_before(a.first, b.first); });
    std::string out = factor_string(factors.front(), chain);
    for (std::size_t i = 1; i < factors.size(); ++i) {
        out += '*';
        out += factor_string(factors[i], chain);
    }
    return out;
}

std::string to_string(const Series& a, const FundamentalChain& chain) {
    if (a.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < a.terms().size(); ++i) {
        const Term& t = a.terms()[i];
        const bool negative = sign(t.coeff) < 0;
        if (i == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const Rational mag(negative ? Rational(-t.coeff) : t.coeff);
        if (t.mon.is_one()) {
            out += to_string(mag);
        } else {
            if (mag != 1) {
                out += to_string(mag);
                out += '*';
            }
            out += to_string(t.mon, chain);
        }
    }
    return out;
}

namespace {

class Lexer {
public:
    Lexer(std::string_view text, const FundamentalChain& chain) : s_(text), chain_(&chain) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    std::size_t pos() const { return pos_; }
    bool consume(char c) {
        if (!at_end() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_digit() const {
        return !at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    bool at_name_start() const {
        return !at_end() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) ||
                             s_[pos_] == '_');
    }

    Integer digits() {
        if (!at_digit())
            throw parse_error(pos_, "a digit");
        const std::size_t start = pos_;
        while (at_digit())
            ++pos_;
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    /// Unsigned p or p/q.
    Rational unsigned_rational() {
        Integer num = digits();
        if (!at_end() && peek() == '/' &&
            pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            ++pos_;
            const std::size_t den_pos = pos_;
            Integer den = digits();
            if (den == 0)
                throw parse_error(den_pos, "a nonzero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    /// Signed exponent after '^'.
    Rational signed_rational() {
        const bool negative = consume('-');
        if (!negative)
            consume('+');
        Rational r = unsigned_rational();
        return negative ? Rational(-r) : r;
    }

    /// Fundamental name, greedily extended over `_-digits` and a rational
    /// `/q` suffix when the chain knows the longer name.
    Fundamental name() {
        const std::size_t start = pos_;
        ++pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        if (!at_end() && peek() == '-' && s_[pos_ - 1] == '_' &&
            pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            ++pos_;
            while (at_digit())
                ++pos_;
        }
        std::string base(s_.substr(start, pos_ - start));
        if (!at_end() && peek() == '/' &&
            pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            std::size_t probe = pos_ + 1;
            while (probe < s_.size() && std::isdigit(static_cast<unsigned char>(s_[probe])))
                ++probe;
            std::string extended = base + std::string(s_.substr(pos_, probe - pos_));
            if (auto found = chain_->find(extended)) {
                pos_ = probe;
                return *found;
            }
        }
        if (auto found = chain_->find(base))
            return *found;
        throw parse_error(start, "a known fundamental name");
    }

private:
    std::string_view s_;
    const FundamentalChain* chain_;
    std::size_t pos_ = 0;
};

} // namespace

Series parse_series(std::string_view text, const FundamentalChain& chain) {
    Lexer lex(text, chain);
    std::vector<Term> terms;

    lex.skip_ws();
    if (lex.at_end())
        throw parse_error(lex.pos(), "a term");
    bool negative = lex.consume('-');
    if (!negative)
        lex.consume('+');

    for (;;) {
        Rational coeff = negative ? -1 : 1;
        std::vector<Monomial::Factor> factors;
        for (;;) {
            lex.skip_ws();
            if (lex.at_digit()) {
                coeff = Rational(coeff * lex.unsigned_rational());
            } else if (lex.at_name_start()) {
                Fundamental phi = lex.name();
                Rational exponent = 1;
                lex.skip_ws();
                if (lex.consume('^')) {
                    lex.skip_ws();
                    exponent = lex.signed_rational();
                }
                factors.emplace_back(std::move(phi), std::move(exponent));
            } else {
                throw parse_error(lex.pos(), "a coefficient or a fundamental name");
            }
            lex.skip_ws();
            if (!lex.consume('*'))
                break;
        }
        terms.push_back({std::move(coeff), Monomial::from_factors(std::move(factors))});

        lex.skip_ws();
        if (lex.at_end())
            break;
        if (lex.consume('-'))
            negative = true;
        else if (lex.consume('+'))
            negative = false;
        else
            throw parse_error(lex.pos(), "'+', '-', or end of input");
    }
    return Series::from_terms(std::move(terms));
}

Monomial parse_monomial(std::string_view text, const FundamentalChain& chain) {
    const Series a = parse_series(text, chain);
    if (a.terms().size() != 1 || a.leading_coeff() != 1)
        throw domain_error("text does not denote a single monomial with coefficient 1");
    return a.leading_monomial();
}

} // namespace ghs
