#include "hdatom/reduction.hpp"

#include <cmath>
#include <numeric>

#include "hdatom/potentials.hpp"

namespace hdatom {

Fraction make_fraction(std::int64_t num, std::int64_t den) {
    if (den == 0)
        throw Error(errc::internal, "fraction with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Fraction{num, den};
}

double reduced_l(int d, int l) {
    if (d < 3)
        throw Error(errc::dimension_too_low, "reduced_l needs d >= 3");
    if (l < 0)
        throw Error(errc::negative_l, "reduced_l needs l >= 0");
    return l + 0.5 * (d - 3);
}

double centrifugal_coefficient(int d, int l) {
    const double ld = reduced_l(d, l);
    return ld * (ld + 1.0);
}

RadialProblem reduce(const AtomConfig& config) {
    const Coupling c = coupling(config.potential, config.d, config.Z);
    return RadialProblem{config.d,
                         config.l,
                         reduced_l(config.d, config.l),
                         centrifugal_coefficient(config.d, config.l),
                         c.kappa,
                         c.p};
}

std::vector<double> to_wavefunction(const std::vector<double>& f_samples,
                                    const std::vector<double>& grid, int d) {
    if (f_samples.size() != grid.size())
        throw Error(errc::length_mismatch, std::to_string(f_samples.size()) + " samples vs " +
                                               std::to_string(grid.size()) + " grid points");
    std::vector<double> R(f_samples.size());
    const double expo = -0.5 * (d - 1);
    for (std::size_t i = 0; i < R.size(); ++i)
        R[i] = std::pow(grid[i], expo) * f_samples[i];
    return R;
}

ScalingParams dimensionless_scale(const RadialProblem& problem, double energy) {
    if (problem.d == 4)
        throw Error(errc::scaling_undefined, "the rescaling map is singular at d = 4");
    if (!(energy < 0.0))
        throw Error(errc::positive_energy, "rescaling is defined for bound-state energies only");
    if (problem.p != static_cast<double>(problem.d - 2))
        throw Error(errc::domain_error, "rescaling applies to the Gauss-law problem (p = d-2)");
    ScalingParams s;
    s.alpha = 1.0;
    s.rho_exponent = make_fraction(1, 4 - problem.d);
    s.lambda_exponent = make_fraction(3 - problem.d, 4 - problem.d);
    // the single place where the Schroedinger-form factor 2 enters
    s.lambda_sq = -2.0 * energy;
    return s;
}

} // namespace hdatom
