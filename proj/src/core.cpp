#include "hdatom/core.hpp"

namespace hdatom {

const char* to_string(errc code) {
    switch (code) {
        case errc::dimension_too_low: return "DimensionTooLow";
        case errc::non_positive_charge: return "NonPositiveCharge";
        case errc::negative_l: return "NegativeL";
        case errc::non_positive_radius: return "NonPositiveRadius";
        case errc::non_positive_rho: return "NonPositiveRho";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::scaling_undefined: return "ScalingUndefined";
        case errc::positive_energy: return "PositiveEnergy";
        case errc::unsupported_dimension: return "UnsupportedDimension";
        case errc::domain_error: return "DomainError";
        case errc::grid_too_coarse: return "GridTooCoarse";
        case errc::cutoff_too_small: return "CutoffTooSmall";
        case errc::quadrature_divergent: return "QuadratureDivergent";
        case errc::no_convergence: return "NoConvergence";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

const char* to_string(PotentialKind kind) {
    switch (kind) {
        case PotentialKind::GaussLaw: return "GaussLaw";
        case PotentialKind::BraneWorld: return "BraneWorld";
        case PotentialKind::ExplicitPower: return "ExplicitPower";
    }
    return "Unknown";
}

AtomConfig make_atom_config(int d, double Z, int l, const PotentialSpec& potential) {
    if (d < 3)
        throw Error(errc::dimension_too_low, "d = " + std::to_string(d) + ", need d >= 3");
    if (!(Z > 0.0))
        throw Error(errc::non_positive_charge, "Z = " + std::to_string(Z) + ", need Z > 0");
    if (l < 0)
        throw Error(errc::negative_l, "l = " + std::to_string(l) + ", need l >= 0");
    if (potential.kind == PotentialKind::ExplicitPower) {
        if (!potential.coupling_override || !(*potential.coupling_override > 0.0))
            throw Error(errc::domain_error, "ExplicitPower needs a positive coupling");
        if (!potential.power_override || !(*potential.power_override > 0.0))
            throw Error(errc::domain_error, "ExplicitPower needs a positive power");
    }
    return AtomConfig{d, Z, l, potential};
}

} // namespace hdatom
