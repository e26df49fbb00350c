#pragma once

#include <cstdint>
#include <istream>
#include <string>

#include "ghs/derivation.hpp"

namespace ghs {

struct Budgets {
    unsigned invert = 8;
    unsigned integrate = 6;
    unsigned probe = 32;
};

/// One chain + schema + budgets, as configured by a single config file.
struct Session {
    FundamentalChain chain = FundamentalChain::integer_indexed();
    DerivationSchema schema = DerivationSchema::log_exp(chain);
    Budgets budgets;
    std::uint64_t seed = 0;
};

/// The default session: the log-exp chain E_k (x = E_0) with its standard
/// derivation.
Session default_session();

/// Key-value config format, one `key = value` per line, `#` comments.
/// Recognized keys are documented in the README. Throws config_error.
Session load_session(std::istream& in);
Session load_session_file(const std::string& path);

} // namespace ghs
