#include "hdatom/variational.hpp"

#include <cmath>
#include <limits>

#include "hdatom/quadrature.hpp"
#include "hdatom/reduction.hpp"

namespace hdatom::variational {

const char* to_string(TrialKind t) {
    return t == TrialKind::Exponential ? "Exponential" : "Gaussian";
}

const char* to_string(InfimumKind k) {
    switch (k) {
        case InfimumKind::MinimumAt: return "MinimumAt";
        case InfimumKind::InfimumZero: return "InfimumZero";
        case InfimumKind::UnboundedBelow: return "UnboundedBelow";
    }
    return "Unknown";
}

const char* to_string(SecondDerivativeSign s) {
    switch (s) {
        case SecondDerivativeSign::Positive: return "Positive";
        case SecondDerivativeSign::Zero: return "Zero";
        case SecondDerivativeSign::Negative: return "Negative";
        case SecondDerivativeSign::NoEquilibrium: return "NoEquilibrium";
    }
    return "Unknown";
}

const char* to_string(Stability s) {
    switch (s) {
        case Stability::Stable: return "Stable";
        case Stability::Neutral: return "Neutral";
        case Stability::Unstable: return "Unstable";
        case Stability::NoEquilibrium: return "NoEquilibrium";
    }
    return "Unknown";
}

double ScalingCurve::energy(double s) const {
    if (B_divergent)
        return -std::numeric_limits<double>::infinity();
    return A / (s * s) - B / std::pow(s, static_cast<double>(d - 2));
}

InfimumClass classify_infimum(int d, double A, double B) {
    if (!(A > 0.0) || !(B > 0.0))
        throw Error(errc::domain_error, "classify_infimum needs A, B > 0");
    if (d < 3)
        throw Error(errc::dimension_too_low, "classify_infimum needs d >= 3");
    if (d == 3)
        return {InfimumKind::MinimumAt, 2.0 * A / B};
    if (d == 4)
        return {A >= B ? InfimumKind::InfimumZero : InfimumKind::UnboundedBelow, std::nullopt};
    return {InfimumKind::UnboundedBelow, std::nullopt};
}

ScalingCurve scaling_energy(int d, TrialKind trial, double kappa, int l) {
    if (d < 3)
        throw Error(errc::dimension_too_low, "scaling_energy needs d >= 3");
    if (!(kappa > 0.0))
        throw Error(errc::domain_error, "scaling_energy needs kappa > 0");
    if (l < 0)
        throw Error(errc::negative_l, "scaling_energy needs l >= 0");

    const double cent = centrifugal_coefficient(d, l);
    const int q = l + 1; // trial prefactor power
    const bool gaussian = trial == TrialKind::Gaussian;
    const double r_cut = gaussian ? 12.0 : 45.0 + 5.0 * q;

    auto f = [&](double r) {
        return std::pow(r, q) * std::exp(gaussian ? -0.5 * r * r : -r);
    };
    auto fp = [&](double r) {
        const double radial = gaussian ? -r : -1.0;
        return std::pow(r, q - 1) * std::exp(gaussian ? -0.5 * r * r : -r) * (q + radial * r);
    };

    constexpr double tol = 1e-12;
    const double n2 = integrate([&](double r) { const double v = f(r); return v * v; }, 0.0,
                                r_cut, tol);

    ScalingCurve curve;
    curve.d = d;
    curve.trial = trial;
    curve.l = l;
    curve.A = integrate(
                  [&](double r) {
                      if (r == 0.0)
                          return 0.0;
                      const double df = fp(r);
                      const double v = f(r);
                      return 0.5 * df * df + 0.5 * cent * v * v / (r * r);
                  },
                  0.0, r_cut, tol) /
              n2;

    // B integrand ~ r^{2l+4-d} at the origin: divergent for exponents <= -1
    const int origin_exponent = 2 * l + 4 - d;
    curve.B_divergent = origin_exponent <= -1;
    if (curve.B_divergent) {
        curve.B = std::numeric_limits<double>::infinity();
        curve.infimum_class = {InfimumKind::UnboundedBelow, std::nullopt};
        return curve;
    }
    curve.B = kappa *
              integrate(
                  [&](double r) {
                      if (r == 0.0)
                          return 0.0;
                      const double v = f(r);
                      return v * v / std::pow(r, static_cast<double>(d - 2));
                  },
                  0.0, r_cut, tol) /
              n2;
    curve.infimum_class = classify_infimum(d, curve.A, curve.B);
    return curve;
}

EquilibriumReport classical_equilibrium(int d, double L, double kappa) {
    if (d < 3)
        throw Error(errc::dimension_too_low, "classical_equilibrium needs d >= 3");
    if (!(L > 0.0) || !(kappa > 0.0))
        throw Error(errc::domain_error, "classical_equilibrium needs L, kappa > 0");

    EquilibriumReport rep;
    rep.L = L;
    if (d == 4) {
        // V_eff = (L^2/2 - kappa)/r^2: either identically zero or monotone
        if (std::fabs(0.5 * L * L - kappa) <= 1e-12 * std::max(1.0, kappa)) {
            rep.r_star = std::nullopt; // every radius balances
            rep.second_derivative_sign = SecondDerivativeSign::Zero;
            rep.classification = Stability::Neutral;
        } else {
            rep.r_star = std::nullopt;
            rep.second_derivative_sign = SecondDerivativeSign::NoEquilibrium;
            rep.classification = Stability::NoEquilibrium;
        }
        return rep;
    }

    // V' = -L^2/r^3 + (d-2) kappa / r^{d-1} = 0
    double r_star;
    if (d == 3)
        r_star = L * L / kappa;
    else
        r_star = std::pow((d - 2) * kappa / (L * L), 1.0 / (d - 4));
    rep.r_star = r_star;
    const double second = 3.0 * L * L / std::pow(r_star, 4) -
                          (d - 1) * (d - 2) * kappa / std::pow(r_star, static_cast<double>(d));
    if (second > 0.0) {
        rep.second_derivative_sign = SecondDerivativeSign::Positive;
        rep.classification = Stability::Stable;
    } else if (second < 0.0) {
        rep.second_derivative_sign = SecondDerivativeSign::Negative;
        rep.classification = Stability::Unstable;
    } else {
        rep.second_derivative_sign = SecondDerivativeSign::Zero;
        rep.classification = Stability::Neutral;
    }
    return rep;
}

} // namespace hdatom::variational
