#pragma once

#include <optional>

#include "ghs/derivation.hpp"

namespace ghs {

/// Leading data of the logarithmic derivative of phi:
/// theta = LM(phi'/phi), F = LC(phi'/phi).
struct ThetaInfo {
    Fundamental phi;
    Monomial theta;
    Rational F;
};

ThetaInfo theta_info(const DerivationSchema& schema, const Fundamental& phi);

enum class GlbKind { Attained, NotInGamma, Unknown };

struct GlbResult {
    GlbKind kind = GlbKind::Unknown;
    std::optional<Monomial> theta; // Attained only
};

/// Greatest lower bound of {theta^(phi)}: exact minimum on FiniteList
/// chains, schema-rule certification for descending-theta indexed schemas,
/// Unknown otherwise after probe_depth samples.
GlbResult theta_glb(const DerivationSchema& schema, unsigned probe_depth);

/// The three-case closed form: returns b with derive(b) ~ a (equal leading
/// terms). Throws no_asymptotic_integral when LM(a) is asymptotic to an
/// attained glb, search_exhausted when the case-3 descent fails within
/// probe_depth.
Series asymptotic_integral(const DerivationSchema& schema, const Series& a,
                           unsigned probe_depth);

/// Rosenlicht's auxiliary monomial u0 for alpha, canonicalized: u1 is the
/// largest probed fundamental with |alpha|^{normalized} > theta^(u1), and u0
/// is the smaller of u1 and alpha/theta^(u1) as a monomial.
Monomial rosenlicht_u0(const DerivationSchema& schema, const Monomial& alpha,
                       unsigned probe_depth);

struct IntegrationResult {
    Series antiderivative;
    Series residual;
    unsigned steps_used = 0;
    bool exact = false; // residual == 0
};

/// Budgeted iterative refinement: b_0 = asymptotic_integral(a),
/// r_{k+1} = r_k - derive(b_k), with LM(r) strictly decreasing each step.
/// Always satisfies derive(antiderivative) + residual == a exactly.
IntegrationResult integrate(const DerivationSchema& schema, const Series& a,
                            unsigned budget, unsigned probe_depth);

} // namespace ghs
