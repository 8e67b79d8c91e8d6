#pragma once

#include <optional>
#include <string>

#include "hdatom/errors.hpp"

namespace hdatom {

inline constexpr const char* version = "1.0.0";

/// Reduced unit system: hbar = electron mass = elementary charge = 1.
/// Energies everywhere in the library are in these units.
struct Constants {
    double hbar = 1.0;
    double mass = 1.0;
    double charge = 1.0;
};

enum class PotentialKind { GaussLaw, BraneWorld, ExplicitPower };

const char* to_string(PotentialKind kind);

/// Choice of the central potential -kappa / r^p.
///
/// GaussLaw:      kappa = eta(d) * Z, p = d - 2  (flux-conserving field in d dimensions)
/// BraneWorld:    p = 1 for any d, default kappa = Z (standard 3-d atomic convention;
///                no charge-unit convention is canonical here, so kappa is overridable)
/// ExplicitPower: both kappa and p supplied by the caller
struct PotentialSpec {
    PotentialKind kind = PotentialKind::GaussLaw;
    std::optional<double> coupling_override;
    std::optional<double> power_override; // ExplicitPower only

    static PotentialSpec gauss_law() { return {PotentialKind::GaussLaw, {}, {}}; }
    static PotentialSpec gauss_law(double kappa) { return {PotentialKind::GaussLaw, kappa, {}}; }
    static PotentialSpec brane_world() { return {PotentialKind::BraneWorld, {}, {}}; }
    static PotentialSpec brane_world(double kappa) { return {PotentialKind::BraneWorld, kappa, {}}; }
    static PotentialSpec explicit_power(double kappa, double p) {
        return {PotentialKind::ExplicitPower, kappa, p};
    }
};

/// Validated problem definition: spatial dimension d >= 3, nuclear charge Z > 0
/// (real, so critical-coupling scans can cross thresholds continuously),
/// orbital quantum number l >= 0, and the potential choice.
struct AtomConfig {
    int d = 3;
    double Z = 1.0;
    int l = 0;
    PotentialSpec potential;
};

/// Validates and builds an AtomConfig.
/// Throws Error with errc::dimension_too_low (d < 3), errc::non_positive_charge (Z <= 0)
/// or errc::negative_l (l < 0).
AtomConfig make_atom_config(int d, double Z, int l, const PotentialSpec& potential);

} // namespace hdatom
