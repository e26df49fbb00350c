#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ghs/asympint.hpp"
#include "ghs/errors.hpp"
#include "ghs/hardy.hpp"
#include "ghs/session.hpp"
#include "ghs/text.hpp"

namespace {

std::vector<ghs::Fundamental> parse_window(const ghs::FundamentalChain& chain,
                                           const std::string& range) {
    const auto dots = range.find("..");
    if (dots == std::string::npos)
        throw ghs::window_error("window must have the form LO..HI");
    try {
        std::size_t used = 0;
        const long lo = std::stol(range.substr(0, dots), &used);
        if (used != dots)
            throw std::invalid_argument("");
        const std::string hi_text = range.substr(dots + 2);
        const long hi = std::stol(hi_text, &used);
        if (used != hi_text.size())
            throw std::invalid_argument("");
        return chain.window(lo, hi);
    } catch (const std::invalid_argument&) {
        throw ghs::window_error("window bounds must be integers");
    } catch (const std::out_of_range&) {
        throw ghs::window_error("window bounds are out of range");
    }
}

std::string join_names(const ghs::FundamentalChain& chain,
                       const std::vector<ghs::Fundamental>& phis) {
    std::string out;
    for (std::size_t i = 0; i < phis.size(); ++i) {
        if (i) out += ", ";
        out += chain.name(phis[i]);
    }
    return out;
}

std::string join_monomials(const ghs::FundamentalChain& chain,
                           const std::vector<ghs::Monomial>& mons) {
    std::string out;
    for (std::size_t i = 0; i < mons.size(); ++i) {
        if (i) out += ", ";
        out += ghs::to_string(mons[i], chain);
    }
    return out;
}

void print_report(const ghs::Session& session, const ghs::ConditionReport& report) {
    std::cout << ghs::to_string(report.verdict) << "\n";
    std::cout << "condition: " << ghs::to_string(report.condition) << "\n";
    std::cout << "window: " << join_names(session.chain, report.window) << "\n";
    if (report.witness) {
        std::cout << "witness: phis = " << join_names(session.chain, report.witness->phis);
        if (!report.witness->taus.empty())
            std::cout << "; taus = " << join_monomials(session.chain, report.witness->taus);
        if (!report.witness->note.empty())
            std::cout << "; " << report.witness->note;
        std::cout << "\n";
    }
    if (!report.exceptional_set.empty())
        std::cout << "exceptional: " << join_names(session.chain, report.exceptional_set)
                  << "\n";
    if (report.window_relative)
        std::cout << "scope: window-relative\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic, derivations, and asymptotic integration for "
                 "generalised series fields"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<unsigned> budget, probe;
    std::optional<std::uint64_t> seed;
    app.add_option("--config", config_path, "Session config file (key = value lines)");
    app.add_option("--budget", budget, "Refinement budget for int");
    app.add_option("--probe", probe, "Probe depth for downward chain searches");
    app.add_option("--seed", seed, "Seed for sampled verifiers");

    std::string expr, expr_b, condition_name, window_spec;

    auto* cmd_derive = app.add_subcommand("derive", "Differentiate a series");
    cmd_derive->add_option("expr", expr, "Series expression")->required();

    auto* cmd_asymp = app.add_subcommand("asymp-int", "Leading-term antiderivative");
    cmd_asymp->add_option("expr", expr, "Series expression")->required();

    auto* cmd_int = app.add_subcommand("int", "Budgeted iterative integration");
    cmd_int->add_option("expr", expr, "Series expression")->required();

    auto* cmd_check = app.add_subcommand("check", "Finite-window summability checker");
    cmd_check->add_option("condition", condition_name,
                          "h1prime | h1doubleprime | h2doubleprime | h3prime")
        ->required();
    cmd_check->add_option("--window", window_spec, "Index window LO..HI")->required();

    auto* cmd_hfield = app.add_subcommand("hfield", "Positivity of the leading "
                                                    "coefficients of phi'/phi");
    cmd_hfield->add_option("--window", window_spec, "Index window LO..HI")->required();

    auto* cmd_lhospital = app.add_subcommand("lhospital", "l'Hospital check for one pair");
    cmd_lhospital->add_option("a", expr, "First series")->required();
    cmd_lhospital->add_option("b", expr_b, "Second series")->required();

    auto* cmd_logcompat =
        app.add_subcommand("logcompat", "Logarithmic-derivative compatibility for one pair");
    cmd_logcompat->add_option("a", expr, "First series")->required();
    cmd_logcompat->add_option("b", expr_b, "Second series")->required();

    auto* cmd_glb = app.add_subcommand("glb", "Infimum of the logarithmic-derivative "
                                              "leading monomials");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        ghs::Session session =
            config_path.empty() ? ghs::default_session() : ghs::load_session_file(config_path);
        if (budget) session.budgets.integrate = *budget;
        if (probe) session.budgets.probe = *probe;
        if (seed) session.seed = *seed;
        const ghs::FundamentalChain& chain = session.chain;

        if (*cmd_derive) {
            std::cout << ghs::to_string(session.schema.derive(ghs::parse_series(expr, chain)),
                                        chain)
                      << "\n";
        } else if (*cmd_asymp) {
            std::cout << ghs::to_string(
                             ghs::asymptotic_integral(session.schema,
                                                      ghs::parse_series(expr, chain),
                                                      session.budgets.probe),
                             chain)
                      << "\n";
        } else if (*cmd_int) {
            const ghs::IntegrationResult r =
                ghs::integrate(session.schema, ghs::parse_series(expr, chain),
                               session.budgets.integrate, session.budgets.probe);
            std::cout << ghs::to_string(r.antiderivative, chain) << "\n";
            std::cout << "residual: " << ghs::to_string(r.residual, chain) << "\n";
            std::cout << "exact: " << (r.exact ? "true" : "false") << "\n";
        } else if (*cmd_check) {
            const auto condition = ghs::parse_condition(condition_name);
            if (!condition)
                throw ghs::window_error("unknown condition '" + condition_name + "'");
            std::vector<ghs::Fundamental> window = parse_window(chain, window_spec);
            if (*condition == ghs::Condition::H1DoublePrime)
                std::reverse(window.begin(), window.end());
            const ghs::ConditionReport report =
                ghs::check_condition(session.schema, *condition, std::move(window));
            print_report(session, report);
        } else if (*cmd_hfield) {
            const ghs::HFieldResult r =
                ghs::check_hfield(session.schema, parse_window(chain, window_spec));
            if (r.yes)
                std::cout << "Yes\n";
            else
                std::cout << "No " << chain.name(*r.witness) << "\n";
        } else if (*cmd_lhospital) {
            std::cout << (ghs::verify_lhospital(session.schema,
                                                ghs::parse_series(expr, chain),
                                                ghs::parse_series(expr_b, chain))
                              ? "true"
                              : "false")
                      << "\n";
        } else if (*cmd_logcompat) {
            std::cout << (ghs::verify_log_compat(session.schema,
                                                 ghs::parse_series(expr, chain),
                                                 ghs::parse_series(expr_b, chain))
                              ? "true"
                              : "false")
                      << "\n";
        } else if (*cmd_glb) {
            const ghs::GlbResult r = ghs::theta_glb(session.schema, session.budgets.probe);
            switch (r.kind) {
            case ghs::GlbKind::Attained:
                std::cout << "Attained " << ghs::to_string(*r.theta, chain) << "\n";
                break;
            case ghs::GlbKind::NotInGamma:
                std::cout << "NotInGamma\n";
                break;
            case ghs::GlbKind::Unknown:
                std::cout << "Unknown\n";
                break;
            }
        }
        return 0;
    } catch (const ghs::parse_error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 2;
    } catch (const ghs::config_error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 2;
    } catch (const ghs::error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 1;
    }
}
