#pragma once

#include <optional>
#include <vector>

#include "hdatom/errors.hpp"

namespace hdatom::d4 {

enum class Regime { SubCritical, Critical, SuperCritical };

const char* to_string(Regime r);

/// The d=4 criticality parameter zeta_l = 1 + l_4(l_4+1) - 3/4 - Z/(2 pi^2)
/// (reduced units, l_4 = l + 1/2) and the charge at which it vanishes.
struct ZetaReport {
    double zeta;
    std::optional<double> nu; // sqrt(zeta) when zeta >= 0
    bool imaginary_order;     // zeta < 0: nu would be imaginary
    double critical_Z;        // 2 pi^2 (1 + l_4(l_4+1) - 3/4)
    Regime regime;
    double critical_tol;
};

/// regime is Critical when |zeta| <= critical_tol (default 1e-12), otherwise the
/// sign of zeta decides.
ZetaReport zeta(int l, double Z, double critical_tol = 1e-12);

/// g_1 = I_nu and g_2 = K_nu sampled on the given rho values; both solve
/// g'' + g'/rho - (1 + nu^2/rho^2) g = 0. Throws errc::non_positive_rho.
struct SolutionSamples {
    std::vector<double> i_values;
    std::vector<double> k_values;
};

SolutionSamples d4_solutions(double nu, const std::vector<double>& rho_samples);

enum class SolutionKind { Inu, Knu };
enum class InfinityClass { ExponentialDecay, ExponentialGrowth };

const char* to_string(SolutionKind k);
const char* to_string(InfinityClass c);

/// Normalizability of the full radial function R = g/rho against the measure
/// r^3 dr. Two separate facts are reported: whether the norm integral converges
/// (origin exponent of |R|^2 r^3 and the behavior at infinity) and whether the
/// function value itself diverges pointwise at the origin — they differ for
/// K_nu with 0 < nu < 1.
struct NormVerdict {
    double origin_exponent; // leading power of |R|^2 r^3 as r -> 0
    InfinityClass infinity_class;
    bool norm_converges_at_origin;   // origin_exponent > -1
    bool norm_converges_at_infinity;
    bool pointwise_divergent_at_origin;
    std::optional<double> numeric_norm; // quadrature when both ends converge
};

NormVerdict normalizability(SolutionKind kind, double nu);

/// Maximum normalized finite-difference residual of the d=4 equation over
/// symmetric three-point stencils centered on the given points (relative step
/// 3e-5, extended-precision samples). Used by the verification suites.
struct ResidualReport {
    double max_residual_i;
    double max_residual_k;
};

ResidualReport ode_residual(double nu, const std::vector<double>& rho_centers);

} // namespace hdatom::d4
