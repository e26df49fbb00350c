#include "ghs/chain.hpp"

#include <algorithm>

#include "ghs/errors.hpp"

namespace ghs {

namespace {

bool is_integral(const Rational& r) { return denominator(r) == 1; }

} // namespace

FundamentalChain FundamentalChain::finite_list(std::vector<std::string> names, bool with_shift) {
    if (names.empty()) throw config_error("finite chain needs at least one name");
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw config_error("duplicate chain name: " + names[i]);
    FundamentalChain c;
    c.kind_ = ChainKind::FiniteList;
    c.names_ = std::move(names);
    c.has_shift_ = with_shift;
    return c;
}

FundamentalChain FundamentalChain::integer_indexed(std::string prefix, std::string zero_alias,
                                                   bool with_shift) {
    FundamentalChain c;
    c.kind_ = ChainKind::IntegerIndexed;
    c.prefix_ = std::move(prefix);
    c.zero_alias_ = std::move(zero_alias);
    c.has_shift_ = with_shift;
    return c;
}

FundamentalChain FundamentalChain::rational_indexed(std::string prefix, std::string zero_alias,
                                                    std::optional<Rational> least,
                                                    bool with_shift) {
    FundamentalChain c;
    c.kind_ = ChainKind::RationalIndexed;
    c.prefix_ = std::move(prefix);
    c.zero_alias_ = std::move(zero_alias);
    c.least_ = std::move(least);
    c.has_shift_ = with_shift;
    return c;
}

bool FundamentalChain::has_least() const noexcept {
    switch (kind_) {
    case ChainKind::FiniteList: return true;
    case ChainKind::IntegerIndexed: return false;
    case ChainKind::RationalIndexed: return least_.has_value();
    }
    return false;
}

Fundamental FundamentalChain::least() const {
    if (!has_least()) throw domain_error("chain has no least element");
    if (kind_ == ChainKind::FiniteList) return Fundamental(0);
    return Fundamental(*least_);
}

std::size_t FundamentalChain::size() const {
    if (kind_ != ChainKind::FiniteList) throw domain_error("size() on an infinite chain");
    return names_.size();
}

bool FundamentalChain::contains(const Rational& index) const {
    switch (kind_) {
    case ChainKind::FiniteList:
        return is_integral(index) && index >= 0 && index < Rational(names_.size());
    case ChainKind::IntegerIndexed: return is_integral(index);
    case ChainKind::RationalIndexed: return !least_ || index >= *least_;
    }
    return false;
}

Fundamental FundamentalChain::at(const Rational& index) const {
    if (!contains(index)) throw domain_error("index " + to_string(index) + " outside chain");
    return Fundamental(index);
}

std::string FundamentalChain::name(const Fundamental& phi) const {
    if (kind_ == ChainKind::FiniteList) {
        auto i = static_cast<std::size_t>(numerator(phi.index()));
        return names_.at(i);
    }
    if (phi.index() == 0 && !zero_alias_.empty()) return zero_alias_;
    return prefix_ + to_string(phi.index());
}

std::optional<Fundamental> FundamentalChain::find(std::string_view name) const {
    if (kind_ == ChainKind::FiniteList) {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) return std::nullopt;
        return Fundamental(Rational(it - names_.begin()));
    }
    if (!zero_alias_.empty() && name == zero_alias_) return Fundamental(0);
    if (name.substr(0, prefix_.size()) != prefix_) return std::nullopt;
    auto idx = parse_rational(name.substr(prefix_.size()));
    if (!idx || !contains(*idx)) return std::nullopt;
    if (kind_ == ChainKind::IntegerIndexed && denominator(*idx) != 1) return std::nullopt;
    return Fundamental(*idx);
}

Fundamental FundamentalChain::shift(const Fundamental& phi) const {
    if (!has_shift_) throw domain_error("chain has no shift endomorphism");
    if (has_least() && phi == least()) return phi;
    if (kind_ == ChainKind::FiniteList) return Fundamental(phi.index() - 1);
    Rational down = phi.index() - 1;
    if (kind_ == ChainKind::RationalIndexed && least_ && down < *least_) return Fundamental(*least_);
    return Fundamental(down);
}

std::optional<Fundamental> FundamentalChain::predecessor(const Fundamental& phi) const {
    if (has_least() && phi == least()) return std::nullopt;
    if (kind_ == ChainKind::FiniteList) return Fundamental(phi.index() - 1);
    Rational down = phi.index() - 1;
    if (kind_ == ChainKind::RationalIndexed && least_ && down < *least_) return Fundamental(*least_);
    return Fundamental(down);
}

std::vector<Fundamental> FundamentalChain::window(long lo, long hi) const {
    if (lo > hi) throw window_error("empty window: lo > hi");
    std::vector<Fundamental> w;
    w.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long i = lo; i <= hi; ++i) {
        Rational idx(i);
        if (!contains(idx)) throw window_error("window index " + std::to_string(i) + " outside chain");
        w.emplace_back(idx);
    }
    return w;
}

} // namespace ghs
