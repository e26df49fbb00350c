#include "ghs/session.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "ghs/errors.hpp"
#include "ghs/text.hpp"

namespace ghs {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep))
        parts.push_back(trim(item));
    if (!s.empty() && s.back() == sep)
        parts.emplace_back();
    return parts;
}

Rational require_rational(const std::string& text, const std::string& key) {
    auto r = parse_rational(text);
    if (!r)
        throw config_error("key '" + key + "': '" + text + "' is not a rational");
    return *r;
}

unsigned require_unsigned(const std::string& text, const std::string& key) {
    try {
        if (text.empty() ||
            text.find_first_not_of("0123456789") != std::string::npos)
            throw config_error("");
        std::size_t used = 0;
        const unsigned long v = std::stoul(text, &used);
        if (used != text.size())
            throw config_error("");
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw config_error("key '" + key + "': '" + text + "' is not a nonnegative integer");
    }
}

struct RawConfig {
    std::map<std::string, std::string> scalar;
    std::vector<std::string> terms;                // repeatable `term =`
    std::map<std::string, std::string> table;      // `d.NAME =`
    std::map<std::string, std::string> t_override; // `t.NAME =`
};

RawConfig read_raw(std::istream& in) {
    RawConfig raw;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw config_error("line " + std::to_string(lineno) + ": empty key");
        if (key == "term") {
            raw.terms.push_back(value);
        } else if (key.rfind("d.", 0) == 0) {
            raw.table[key.substr(2)] = value;
        } else if (key.rfind("t.", 0) == 0) {
            raw.t_override[key.substr(2)] = value;
        } else if (!raw.scalar.emplace(key, value).second) {
            throw config_error("line " + std::to_string(lineno) + ": duplicate key '" + key +
                               "'");
        }
    }
    return raw;
}

Fundamental resolve_name(const FundamentalChain& chain, const std::string& name) {
    auto phi = chain.find(name);
    if (!phi)
        throw config_error("'" + name + "' is not a fundamental of the configured chain");
    return *phi;
}

FundamentalChain build_chain(const RawConfig& raw) {
    const auto get = [&](const std::string& key,
                         const std::string& fallback) -> std::string {
        auto it = raw.scalar.find(key);
        return it == raw.scalar.end() ? fallback : it->second;
    };
    const std::string kind = get("chain", "log_exp");
    const std::string prefix = get("prefix", "E_");
    const std::string zero_alias = get("zero_alias", "x");
    const bool with_shift = [&] {
        const std::string v = get("shift", "on");
        if (v == "on") return true;
        if (v == "off") return false;
        throw config_error("key 'shift': expected on or off");
    }();

    if (kind == "log_exp" || kind == "integer_indexed")
        return FundamentalChain::integer_indexed(prefix, zero_alias, with_shift);
    if (kind == "finite_list") {
        auto it = raw.scalar.find("names");
        if (it == raw.scalar.end())
            throw config_error("chain = finite_list needs a 'names' list");
        std::vector<std::string> names = split(it->second, ',');
        return FundamentalChain::finite_list(std::move(names), with_shift);
    }
    if (kind == "rational_indexed") {
        std::optional<Rational> least;
        if (auto it = raw.scalar.find("least"); it != raw.scalar.end())
            least = require_rational(it->second, "least");
        return FundamentalChain::rational_indexed(prefix, zero_alias, std::move(least),
                                                  with_shift);
    }
    throw config_error("key 'chain': unknown kind '" + kind + "'");
}

DerivationSchema build_schema(const RawConfig& raw, const FundamentalChain& chain) {
    std::string kind;
    if (auto it = raw.scalar.find("schema"); it != raw.scalar.end()) {
        kind = it->second;
    } else if (raw.scalar.count("chain") == 0 ||
               raw.scalar.at("chain") == "log_exp") {
        kind = "log_exp";
    } else if (!raw.table.empty()) {
        kind = "explicit";
    } else {
        throw config_error("no 'schema' key and no explicit 'd.NAME' rules");
    }

    std::map<Rational, Rational> t;
    for (const auto& [name, value] : raw.t_override)
        t[resolve_name(chain, name).index()] = require_rational(value, "t." + name);

    if (kind == "log_exp")
        return DerivationSchema::log_exp(chain);
    if (kind == "explicit") {
        std::map<Rational, Series> table;
        for (const auto& [name, value] : raw.table) {
            try {
                table[resolve_name(chain, name).index()] = parse_series(value, chain);
            } catch (const parse_error& e) {
                throw config_error("key 'd." + name + "': " + e.what());
            }
        }
        return DerivationSchema::explicit_table(chain, std::move(table));
    }
    if (kind == "shift_monomial") {
        auto it = raw.scalar.find("alpha");
        if (it == raw.scalar.end())
            throw config_error("schema = shift_monomial needs an 'alpha' list");
        std::vector<Rational> alphas;
        for (const std::string& part : split(it->second, ','))
            alphas.push_back(require_rational(part, "alpha"));
        return DerivationSchema::shift_monomial(chain, std::move(alphas), std::move(t));
    }
    if (kind == "real_indexed_power") {
        Rational beta = 0;
        if (auto b = raw.scalar.find("beta"); b != raw.scalar.end())
            beta = require_rational(b->second, "beta");
        return DerivationSchema::real_indexed_power(chain, std::move(beta), std::move(t));
    }
    if (kind == "general_shift") {
        Monomial gamma;
        if (auto g = raw.scalar.find("gamma"); g != raw.scalar.end()) {
            try {
                gamma = parse_monomial(g->second, chain);
            } catch (const error& e) {
                throw config_error(std::string("key 'gamma': ") + e.what());
            }
        }
        if (raw.terms.empty())
            throw config_error("schema = general_shift needs at least one 'term'");
        std::vector<GeneralShiftTerm> support;
        for (const std::string& entry : raw.terms) {
            const auto colon = entry.find(':');
            if (colon == std::string::npos)
                throw config_error("key 'term': expected 'coeff : e0, e1, ...'");
            GeneralShiftTerm term;
            term.coeff = require_rational(trim(entry.substr(0, colon)), "term");
            for (const std::string& part : split(trim(entry.substr(colon + 1)), ','))
                term.exponents.push_back(require_rational(part, "term"));
            support.push_back(std::move(term));
        }
        return DerivationSchema::general_shift(chain, std::move(gamma), std::move(support));
    }
    throw config_error("key 'schema': unknown kind '" + kind + "'");
}

} // namespace

Session default_session() { return {}; }

Session load_session(std::istream& in) {
    const RawConfig raw = read_raw(in);
    for (const auto& [key, value] : raw.scalar) {
        static const char* known[] = {"chain",   "names", "prefix", "zero_alias",
                                      "least",   "shift", "schema", "alpha",
                                      "beta",    "gamma", "invert_budget",
                                      "integrate_budget", "probe", "seed"};
        bool ok = false;
        for (const char* k : known)
            ok = ok || key == k;
        if (!ok)
            throw config_error("unknown key '" + key + "'");
    }

    Session session;
    session.chain = build_chain(raw);
    try {
        session.schema = build_schema(raw, session.chain);
    } catch (const schema_domain_error& e) {
        throw config_error(e.what());
    }
    if (auto it = raw.scalar.find("invert_budget"); it != raw.scalar.end())
        session.budgets.invert = require_unsigned(it->second, "invert_budget");
    if (auto it = raw.scalar.find("integrate_budget"); it != raw.scalar.end())
        session.budgets.integrate = require_unsigned(it->second, "integrate_budget");
    if (auto it = raw.scalar.find("probe"); it != raw.scalar.end())
        session.budgets.probe = require_unsigned(it->second, "probe");
    if (auto it = raw.scalar.find("seed"); it != raw.scalar.end())
        session.seed = require_unsigned(it->second, "seed");
    return session;
}

Session load_session_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw config_error("cannot open config file '" + path + "'");
    return load_session(in);
}

} // namespace ghs
