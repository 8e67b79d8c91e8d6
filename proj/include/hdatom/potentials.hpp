#pragma once

#include "hdatom/core.hpp"

namespace hdatom {

/// Geometric factor of the d-dimensional Coulomb potential,
///   eta(d) = Gamma(d/2) / (2 pi^{d/2} (d-2)),
/// with Gamma at integer and half-integer arguments evaluated exactly by the
/// recurrence Gamma(x+1) = x Gamma(x) from Gamma(1) = 1, Gamma(1/2) = sqrt(pi).
/// eta(3) = 1/(4 pi), eta(4) = 1/(4 pi^2), eta(5) = 1/(8 pi^2).
double eta(int d);

/// Attractive coupling and power of U(r) = -kappa / r^p for the given spec.
struct Coupling {
    double kappa;
    double p;
};

Coupling coupling(const PotentialSpec& spec, int d, double Z);

/// U(r) = -kappa / r^p, strictly negative and increasing in r, -> 0 as r -> inf.
/// Throws errc::non_positive_radius for r <= 0.
double potential_energy(const PotentialSpec& spec, const AtomConfig& config, double r);

} // namespace hdatom
