#pragma once

#include <optional>
#include <vector>

#include "hdatom/core.hpp"
#include "hdatom/reduction.hpp"

namespace hdatom::eigen {

/// Uniform radial grid; nodes r_i = r_min + i h, h = (r_max - r_min)/(n-1).
struct Grid {
    double r_min;
    double r_max;
    int n;

    double spacing() const { return (r_max - r_min) / (n - 1); }
    std::vector<double> nodes() const;
};

Grid make_grid(double r_min, double r_max, int n);

/// Symmetric tridiagonal matrix: diag[i] and off[i] (= element (i, i+1)).
struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> off;
};

/// Discretizes -(1/2) f'' + [cent/(2r^2) - kappa/r^p] f on the interior nodes with
/// Dirichlet conditions f(r_min) = f(r_max) = 0:
///   diag_i = 1/h^2 + cent/(2 r_i^2) - kappa/r_i^p,  off_i = -1/(2 h^2).
/// Throws errc::grid_too_coarse for n < 16 and errc::cutoff_too_small when the
/// potential overflows at r_min.
Tridiagonal assemble_hamiltonian(const RadialProblem& problem, const Grid& grid);

/// Number of eigenvalues strictly below lambda (Sturm/LDL^T inertia count).
int count_below(const Tridiagonal& m, double lambda);

/// k smallest eigenvalues by Sturm-sequence bisection, ascending, to absolute
/// tolerance 1e-12 * max(1, |E|). Deterministic.
std::vector<double> lowest_eigenvalues(const Tridiagonal& m, int k);

struct ShootResult {
    int node_count;
    double log_derivative_mismatch; // crosses zero at eigenvalues
    bool rescaled;                  // informational: solution renormalized mid-sweep
};

/// Numerov integration outward from r_min and inward from r_max, matched at the
/// outermost classical turning point (grid midpoint if none).
ShootResult numerov_shoot(const RadialProblem& problem, double energy, const Grid& grid);

/// Inner boundary handling for spectrum():
///  - HardWall: plain Dirichlet f(r_min) = 0 (the cutoff regularization; default).
///  - RegularOrigin: first-row Robin condition matching the regular behavior
///    f ~ r^{l_d+1}, which removes the O(r_min) wall shift of regular problems.
enum class InnerBoundary { HardWall, RegularOrigin };

const char* to_string(InnerBoundary b);

struct SpectrumOptions {
    InnerBoundary boundary = InnerBoundary::HardWall;
    bool cross_check = true; // Numerov zero-crossing check on the ground state
    bool refine = true;      // doubled-grid convergence test + Richardson estimate
};

struct SpectrumResult {
    std::vector<double> eigenvalues; // ascending, reduced energy units
    std::vector<std::vector<double>> wavefunctions; // f samples on all n nodes, sum f^2 h = 1
    std::vector<int> node_counts;
    Grid grid;
    bool converged = false;
    std::optional<std::vector<double>> richardson_estimate;
    std::optional<double> numerov_ground_energy;
    bool numerov_agrees = false;
    bool rescaled = false;
};

SpectrumResult spectrum(const AtomConfig& config, const Grid& grid, int k,
                        const SpectrumOptions& options = {});

enum class CollapseClass { BoundedBelow, Collapsing };

const char* to_string(CollapseClass c);

enum class GridKind { Uniform, Geometric };

const char* to_string(GridKind g);

/// Ground energy as a function of the inner Dirichlet cutoff. Collapsing means the
/// energies are negative and at least double in magnitude on each of the last three
/// cutoff halvings; bound_state_energies clamps to the negative part (0 = no bound
/// state found), the paper-facing quantity.
struct CollapseStudy {
    std::vector<double> cutoffs;
    std::vector<double> ground_energies;
    std::vector<double> bound_state_energies;
    CollapseClass classification;
    GridKind grid_kind;
    int grid_n;
    double r_max;
};

CollapseStudy collapse_study(const AtomConfig& config, const std::vector<double>& cutoffs,
                             int grid_n, double r_max);

/// Scale-invariant potentials near threshold need inner/outer ratios far beyond any
/// affordable uniform grid, so this variant works on a geometric grid: with
/// f = sqrt(r) u(ln r) the problem becomes the generalized pencil
///   -(1/2) u'' + [(cent + 1/4)/2 - kappa e^{(2-p)t}] u = E e^{2t} u,
/// solved by LDL^T inertia bisection.
double ground_energy_geometric(const RadialProblem& problem, double r_min, double r_max, int n);

CollapseStudy collapse_study_geometric(const AtomConfig& config,
                                       const std::vector<double>& cutoffs, int grid_n,
                                       double r_max);

/// Bisection over Z of the d=4 Gauss-law collapse classification (geometric study).
struct FlipBracket {
    double z_bounded;    // highest Z found BoundedBelow
    double z_collapsing; // lowest Z found Collapsing
};

FlipBracket critical_charge_bracket(int l, const std::vector<double>& cutoffs, int grid_n,
                                    double r_max, double z_lo, double z_hi, double width);

} // namespace hdatom::eigen
