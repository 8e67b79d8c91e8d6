#pragma once

#include <optional>

#include "hdatom/errors.hpp"

namespace hdatom::variational {

/// Scale-family trials f_s(r) = s^{-1/2} f(r/s) built from the bare 3d forms
/// f ~ r^{l+1} e^{-r} (Exponential) and f ~ r^{l+1} e^{-r^2/2} (Gaussian).
enum class TrialKind { Exponential, Gaussian };

const char* to_string(TrialKind t);

enum class InfimumKind { MinimumAt, InfimumZero, UnboundedBelow };

const char* to_string(InfimumKind k);

struct InfimumClass {
    InfimumKind kind;
    std::optional<double> s_star; // the minimizing scale, MinimumAt only
};

/// E(s) = A/s^2 - B/s^{d-2} for the normalized trial: A is the kinetic-plus-
/// centrifugal quadrature at unit scale, B the magnitude of the potential one.
/// A divergent B (integrand exponent <= -1 at the origin) is flagged and forces
/// UnboundedBelow; E(s) is then -inf for every s.
struct ScalingCurve {
    int d;
    TrialKind trial;
    int l;
    double A;
    double B; // +inf when divergent
    bool B_divergent;
    InfimumClass infimum_class;

    double energy(double s) const;
};

ScalingCurve scaling_energy(int d, TrialKind trial, double kappa, int l);

/// Exact classification of inf_s [A/s^2 - B/s^{d-2}]:
/// d=3 minimum at s* = 2A/B; d=4 InfimumZero iff A >= B else UnboundedBelow;
/// d>=5 UnboundedBelow.
InfimumClass classify_infimum(int d, double A, double B);

enum class SecondDerivativeSign { Positive, Zero, Negative, NoEquilibrium };
enum class Stability { Stable, Neutral, Unstable, NoEquilibrium };

const char* to_string(SecondDerivativeSign s);
const char* to_string(Stability s);

/// Circular-orbit analysis of V_eff(r) = L^2/(2r^2) - kappa/r^{d-2} (unit mass):
/// d=3 unique minimum (Stable); d=4 identically-zero balance at L^2/2 = kappa
/// (Neutral) and no equilibrium otherwise; d>=5 unique maximum (Unstable) at
/// r*^{d-4} = (d-2) kappa / L^2.
struct EquilibriumReport {
    double L;
    std::optional<double> r_star;
    SecondDerivativeSign second_derivative_sign;
    Stability classification;
};

EquilibriumReport classical_equilibrium(int d, double L, double kappa);

} // namespace hdatom::variational
