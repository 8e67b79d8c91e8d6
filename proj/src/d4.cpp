#include "hdatom/d4.hpp"

#include <cmath>
#include <numbers>

#include "hdatom/quadrature.hpp"
#include "hdatom/reduction.hpp"
#include "hdatom/specfun.hpp"

namespace hdatom::d4 {

const char* to_string(Regime r) {
    switch (r) {
        case Regime::SubCritical: return "SubCritical";
        case Regime::Critical: return "Critical";
        case Regime::SuperCritical: return "SuperCritical";
    }
    return "Unknown";
}

const char* to_string(SolutionKind k) { return k == SolutionKind::Inu ? "Inu" : "Knu"; }

const char* to_string(InfinityClass c) {
    return c == InfinityClass::ExponentialDecay ? "ExponentialDecay" : "ExponentialGrowth";
}

ZetaReport zeta(int l, double Z, double critical_tol) {
    if (l < 0)
        throw Error(errc::negative_l, "zeta needs l >= 0");
    if (!(Z > 0.0))
        throw Error(errc::non_positive_charge, "zeta needs Z > 0");
    const double l4 = reduced_l(4, l);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double base = 1.0 + l4 * (l4 + 1.0) - 0.75;
    ZetaReport rep;
    rep.zeta = base - Z / (2.0 * pi2);
    rep.critical_Z = 2.0 * pi2 * base;
    rep.critical_tol = critical_tol;
    rep.imaginary_order = rep.zeta < 0.0;
    rep.nu = rep.zeta >= 0.0 ? std::optional<double>(std::sqrt(rep.zeta)) : std::nullopt;
    if (std::fabs(rep.zeta) <= critical_tol)
        rep.regime = Regime::Critical;
    else
        rep.regime = rep.zeta > 0.0 ? Regime::SubCritical : Regime::SuperCritical;
    return rep;
}

SolutionSamples d4_solutions(double nu, const std::vector<double>& rho_samples) {
    if (nu < 0.0)
        throw Error(errc::domain_error, "d4_solutions needs nu >= 0");
    SolutionSamples out;
    out.i_values.reserve(rho_samples.size());
    out.k_values.reserve(rho_samples.size());
    for (double rho : rho_samples) {
        if (!(rho > 0.0))
            throw Error(errc::non_positive_rho, "rho must be positive");
        out.i_values.push_back(specfun::bessel_i(nu, rho).value);
        out.k_values.push_back(specfun::bessel_k(nu, rho).value);
    }
    return out;
}

namespace {

// int_0^infty K_nu(rho)^2 rho drho for 0 <= nu < 1: analytic small-rho head from the
// two-sided leading series plus quadrature of the smooth remainder in t = ln(rho).
double k_norm_squared(double nu) {
    const double rho0 = 1e-3;
    double head;
    if (nu < 1e-12) {
        // K_0 ~ ln(2/rho) - euler; int_0^{rho0} rho (a - ln rho)^2 drho
        const double a = std::log(2.0) - 0.5772156649015329;
        const double q = a - std::log(rho0);
        head = 0.5 * rho0 * rho0 * (q * q + q + 0.5);
    } else {
        const double cm = std::tgamma(nu) * std::pow(2.0, nu - 1.0);
        const double cp = std::tgamma(-nu) * std::pow(2.0, -nu - 1.0);
        const double p = std::pow(rho0, 2.0 - 2.0 * nu);
        head = cm * cm * (p / (2.0 - 2.0 * nu) +
                          p * rho0 * rho0 / (2.0 * (1.0 - nu) * (4.0 - 2.0 * nu))) +
               cm * cp * rho0 * rho0 +
               cp * cp * std::pow(rho0, 2.0 + 2.0 * nu) / (2.0 + 2.0 * nu);
    }
    const double tail = integrate(
        [nu](double t) {
            const double rho = std::exp(t);
            const double k = specfun::bessel_k(nu, rho).value;
            return k * k * rho * rho;
        },
        std::log(rho0), std::log(45.0), 1e-12);
    return head + tail;
}

} // namespace

NormVerdict normalizability(SolutionKind kind, double nu) {
    if (nu < 0.0)
        throw Error(errc::domain_error, "normalizability needs nu >= 0");
    NormVerdict v;
    if (kind == SolutionKind::Inu) {
        // |R|^2 r^3 = |I/rho|^2 rho^3 ~ rho^{2 nu + 1}
        v.origin_exponent = 2.0 * nu + 1.0;
        v.infinity_class = InfinityClass::ExponentialGrowth;
        v.norm_converges_at_origin = v.origin_exponent > -1.0;
        v.norm_converges_at_infinity = false;
        v.pointwise_divergent_at_origin = nu < 1.0; // R ~ rho^{nu-1}
        v.numeric_norm = std::nullopt;
        return v;
    }
    v.origin_exponent = 1.0 - 2.0 * nu;
    v.infinity_class = InfinityClass::ExponentialDecay;
    v.norm_converges_at_origin = v.origin_exponent > -1.0;
    v.norm_converges_at_infinity = true;
    v.pointwise_divergent_at_origin = true; // K diverges at the origin for every nu >= 0
    if (v.norm_converges_at_origin)
        v.numeric_norm = k_norm_squared(nu);
    return v;
}

ResidualReport ode_residual(double nu, const std::vector<double>& rho_centers) {
    constexpr long double delta = 3e-5L;
    ResidualReport rep{0.0, 0.0};
    for (double rho : rho_centers) {
        if (!(rho > 0.0))
            throw Error(errc::non_positive_rho, "rho must be positive");
        const long double r = rho;
        const long double h = delta * r;
        for (int which = 0; which < 2; ++which) {
            long double gm, g0, gp;
            if (which == 0) {
                const bool asym = specfun::detail::i_asymptotic_at(nu, rho);
                gm = specfun::detail::bessel_i_ld(nu, static_cast<double>(r - h), asym);
                g0 = specfun::detail::bessel_i_ld(nu, rho, asym);
                gp = specfun::detail::bessel_i_ld(nu, static_cast<double>(r + h), asym);
            } else {
                const bool asym = specfun::detail::k_asymptotic_at(nu, rho);
                gm = specfun::detail::bessel_k_ld(nu, static_cast<double>(r - h), asym);
                g0 = specfun::detail::bessel_k_ld(nu, rho, asym);
                gp = specfun::detail::bessel_k_ld(nu, static_cast<double>(r + h), asym);
            }
            const long double d2 = (gp - 2.0L * g0 + gm) / (h * h);
            const long double d1 = (gp - gm) / (2.0L * h);
            const long double coef = 1.0L + (long double)(nu * nu) / (r * r);
            const long double lhs = d2 + d1 / r - coef * g0;
            const long double scale =
                std::fabs(d2) + std::fabs(d1 / r) + coef * std::fabs(g0);
            const double res = static_cast<double>(std::fabs(lhs) / scale);
            (which == 0 ? rep.max_residual_i : rep.max_residual_k) =
                std::max(which == 0 ? rep.max_residual_i : rep.max_residual_k, res);
        }
    }
    return rep;
}

} // namespace hdatom::d4
