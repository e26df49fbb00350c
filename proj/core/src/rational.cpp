#include "ghs/rational.hpp"

namespace ghs {

int sign(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

std::string to_string(const Rational& r) {
    Integer num = numerator(r);
    Integer den = denominator(r);
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
}

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    auto digits = [&](Integer& out) -> bool {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return false;
        out = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out = out * 10 + (text[i] - '0');
            ++i;
        }
        return true;
    };
    Integer num, den = 1;
    if (!digits(num)) return std::nullopt;
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (!digits(den) || den == 0) return std::nullopt;
    }
    if (i != text.size()) return std::nullopt;
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

} // namespace ghs
