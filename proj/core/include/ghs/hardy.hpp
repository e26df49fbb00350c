#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ghs/derivation.hpp"

namespace ghs {

struct HardySample {
    Series a;
    Series b;
    bool ok = false;
};

struct HFieldResult {
    bool yes = true;
    std::optional<Fundamental> witness; // phi with LC(phi'/phi) <= 0
};

struct HardyReport {
    ConditionReport h3prime;
    std::vector<HardySample> lhospital_samples;
    std::vector<HardySample> logcompat_samples;
    HFieldResult hfield;
};

/// (H3'): for all phi < psi in the window, theta^(phi) < theta^(psi) and
/// LF(theta^(phi)/theta^(psi)) < psi. Window ascending.
ConditionReport check_h3prime(const DerivationSchema& schema,
                              std::vector<Fundamental> window);

/// l'Hospital biconditional for one pair: (a =< b) iff (a' =< b').
/// Requires a, b nonzero and not asymptotic to 1.
bool verify_lhospital(const DerivationSchema& schema, const Series& a, const Series& b);

/// Logarithmic-derivative compatibility for one pair with |a| > |b| > 1:
/// a'/a >= b'/b, with a'/a asymptotic to b'/b iff a and b are comparable
/// (equal leading fundamentals). Computed at LM level, exactly.
bool verify_log_compat(const DerivationSchema& schema, const Series& a, const Series& b);

/// LC(phi'/phi) > 0 for every phi in the window.
HFieldResult check_hfield(const DerivationSchema& schema,
                          const std::vector<Fundamental>& window);

/// (derive(a) == 0) iff (a is a constant series).
bool check_constants(const DerivationSchema& schema, const Series& a);

/// Runs check_h3prime plus seeded random HD2/HD3 samples over the window.
/// When h3prime fails, the sample lists additionally contain pairs built
/// from the witness fundamentals (the converse direction of the criterion).
HardyReport sample_report(const DerivationSchema& schema, std::vector<Fundamental> window,
                          std::size_t samples, std::uint64_t seed);

} // namespace ghs
