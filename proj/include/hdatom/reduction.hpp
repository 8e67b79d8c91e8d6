#pragma once

#include <cstdint>
#include <vector>

#include "hdatom/core.hpp"

namespace hdatom {

/// Small exact fraction for the scaling exponents (they are ratios of small integers).
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

Fraction make_fraction(std::int64_t num, std::int64_t den);

/// The reduced 1D radial eigenproblem in Schroedinger form,
///   -(1/2) f'' + [ centrifugal/(2 r^2) - kappa/r^p ] f = E f,
/// where f relates to the full radial function by R = r^{-(d-1)/2} f.
struct RadialProblem {
    int d;
    int l;
    double l_d;         // l + (d-3)/2
    double centrifugal; // l_d (l_d + 1)
    double kappa;
    double p;           // d-2 for GaussLaw
};

/// Exponents of the dimensionless rescaling rho = alpha^{1/(4-d)} r and the squared
/// decay constant lambda^2 = -2 E (reduced units). Undefined at d = 4.
struct ScalingParams {
    double alpha = 1.0;       // m q^2 / hbar^2 = 1 in reduced units
    Fraction rho_exponent;    // 1/(4-d)
    Fraction lambda_exponent; // (3-d)/(4-d)
    double lambda_sq;         // -2 E, positive for bound-state energies
};

/// l_d = l + (d-3)/2 (exact in binary floating point).
double reduced_l(int d, int l);

/// l_d (l_d + 1); equals l(l+d-2) + (d-1)(d-3)/4 exactly.
double centrifugal_coefficient(int d, int l);

RadialProblem reduce(const AtomConfig& config);

/// R(r_i) = r_i^{-(d-1)/2} f(r_i) pointwise. Throws errc::length_mismatch.
std::vector<double> to_wavefunction(const std::vector<double>& f_samples,
                                    const std::vector<double>& grid, int d);

/// Throws errc::scaling_undefined for d = 4 and errc::positive_energy for E >= 0;
/// requires a GaussLaw-shaped problem (p = d-2).
ScalingParams dimensionless_scale(const RadialProblem& problem, double energy);

} // namespace hdatom
