#include "hdatom/potentials.hpp"

#include <cmath>
#include <numbers>

namespace hdatom {

namespace {

// Gamma(d/2) by the exact recurrence from Gamma(1) = 1, Gamma(1/2) = sqrt(pi).
double gamma_half_integer(int twice_x) {
    double g = (twice_x % 2 == 0) ? 1.0 : std::sqrt(std::numbers::pi);
    for (int t = (twice_x % 2 == 0) ? 2 : 1; t < twice_x; t += 2)
        g *= 0.5 * t;
    return g;
}

} // namespace

double eta(int d) {
    if (d < 3)
        throw Error(errc::dimension_too_low, "eta needs d >= 3");
    const double gamma = gamma_half_integer(d);
    return gamma / (2.0 * std::pow(std::numbers::pi, 0.5 * d) * (d - 2));
}

Coupling coupling(const PotentialSpec& spec, int d, double Z) {
    switch (spec.kind) {
        case PotentialKind::GaussLaw:
            return {spec.coupling_override.value_or(eta(d) * Z), static_cast<double>(d - 2)};
        case PotentialKind::BraneWorld:
            return {spec.coupling_override.value_or(Z), 1.0};
        case PotentialKind::ExplicitPower:
            return {spec.coupling_override.value_or(1.0), spec.power_override.value_or(1.0)};
    }
    throw Error(errc::internal, "unreachable potential kind");
}

double potential_energy(const PotentialSpec& spec, const AtomConfig& config, double r) {
    if (!(r > 0.0))
        throw Error(errc::non_positive_radius, "potential evaluated at r = " + std::to_string(r));
    const Coupling c = coupling(spec, config.d, config.Z);
    return -c.kappa / std::pow(r, c.p);
}

} // namespace hdatom
