#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ghs/rational.hpp"

namespace ghs {

enum class ChainKind { FiniteList, IntegerIndexed, RationalIndexed };

/// An element of the fundamental chain, identified by its index. For
/// FiniteList chains the index is the 0-based position in the ascending name
/// list; for indexed chains it is the declared integer or rational index.
/// Comparison follows the chain order (ascending index).
class Fundamental {
public:
    Fundamental() = default;
    explicit Fundamental(Rational index) : index_(std::move(index)) {}

    const Rational& index() const noexcept { return index_; }

    friend bool operator==(const Fundamental& a, const Fundamental& b) {
        return a.index_ == b.index_;
    }
    friend bool operator<(const Fundamental& a, const Fundamental& b) {
        return a.index_ < b.index_;
    }
    friend bool operator>(const Fundamental& a, const Fundamental& b) { return b < a; }
    friend bool operator<=(const Fundamental& a, const Fundamental& b) { return !(b < a); }
    friend bool operator>=(const Fundamental& a, const Fundamental& b) { return !(a < b); }
    friend bool operator!=(const Fundamental& a, const Fundamental& b) { return !(a == b); }

private:
    Rational index_ = 0;
};

/// The ordered index set of fundamental monomials, with naming and an
/// optional shift endomorphism s with s(phi) strictly below phi (possibly
/// fixing a declared least element).
///
/// Indexed chains never materialize their elements; `at` and `window` hand
/// out Fundamentals on demand and comparisons go through the index order.
class FundamentalChain {
public:
    static FundamentalChain finite_list(std::vector<std::string> names, bool with_shift = true);
    static FundamentalChain integer_indexed(std::string prefix = "E_",
                                            std::string zero_alias = "x",
                                            bool with_shift = true);
    static FundamentalChain rational_indexed(std::string prefix,
                                             std::string zero_alias,
                                             std::optional<Rational> least,
                                             bool with_shift = true);

    ChainKind kind() const noexcept { return kind_; }
    bool has_shift() const noexcept { return has_shift_; }
    bool has_least() const noexcept;
    Fundamental least() const;
    std::size_t size() const; // FiniteList only

    /// Element with the given index; throws domain_error when the index is
    /// outside the chain (non-integral position, below the least element, ...).
    Fundamental at(const Rational& index) const;
    bool contains(const Rational& index) const;

    std::string name(const Fundamental& phi) const;
    std::optional<Fundamental> find(std::string_view name) const;

    /// s(phi). The least element (when present) is fixed; on chains without
    /// shift this throws domain_error.
    Fundamental shift(const Fundamental& phi) const;

    /// Next element strictly below phi, if one is reachable: list
    /// predecessor for FiniteList, index - 1 for indexed chains (clamped at
    /// the least element). nullopt at the bottom.
    std::optional<Fundamental> predecessor(const Fundamental& phi) const;

    /// Inclusive window of elements with integer indices lo..hi, ascending.
    std::vector<Fundamental> window(long lo, long hi) const;

private:
    FundamentalChain() = default;

    ChainKind kind_ = ChainKind::IntegerIndexed;
    std::vector<std::string> names_; // FiniteList, ascending
    std::string prefix_;
    std::string zero_alias_;
    bool has_shift_ = false;
    std::optional<Rational> least_; // RationalIndexed lower bound
};

} // namespace ghs
