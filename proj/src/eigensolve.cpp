#include "hdatom/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hdatom::eigen {

const char* to_string(InnerBoundary b) {
    return b == InnerBoundary::HardWall ? "HardWall" : "RegularOrigin";
}

const char* to_string(CollapseClass c) {
    return c == CollapseClass::BoundedBelow ? "BoundedBelow" : "Collapsing";
}

const char* to_string(GridKind g) { return g == GridKind::Uniform ? "uniform" : "geometric"; }

std::vector<double> Grid::nodes() const {
    std::vector<double> r(static_cast<std::size_t>(n));
    const double h = spacing();
    for (int i = 0; i < n; ++i)
        r[static_cast<std::size_t>(i)] = r_min + h * i;
    return r;
}

Grid make_grid(double r_min, double r_max, int n) {
    if (!(r_min > 0.0) || !(r_max > r_min))
        throw Error(errc::domain_error, "grid needs 0 < r_min < r_max");
    if (n < 2)
        throw Error(errc::grid_too_coarse, "grid needs at least 2 nodes");
    return Grid{r_min, r_max, n};
}

namespace {

double effective_potential(const RadialProblem& p, double r) {
    return 0.5 * p.centrifugal / (r * r) - p.kappa / std::pow(r, p.p);
}

void check_cutoff(const RadialProblem& p, double r_min) {
    if (!std::isfinite(effective_potential(p, r_min)))
        throw Error(errc::cutoff_too_small,
                    "potential overflows at r_min = " + std::to_string(r_min));
}

// LDL^T inertia count for (H - lambda W); w = nullptr means the identity weight.
int pencil_count_below(const std::vector<double>& diag, const std::vector<double>& off,
                       const std::vector<double>* w, double lambda, double pivmin) {
    int count = 0;
    double q = diag[0] - lambda * (w ? (*w)[0] : 1.0);
    if (std::fabs(q) < pivmin)
        q = -pivmin;
    if (q < 0.0)
        ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        q = diag[i] - lambda * (w ? (*w)[i] : 1.0) - off[i - 1] * off[i - 1] / q;
        if (std::fabs(q) < pivmin)
            q = -pivmin;
        if (q < 0.0)
            ++count;
    }
    return count;
}

double pivot_floor(const std::vector<double>& off) {
    double emax = 0.0;
    for (double e : off)
        emax = std::max(emax, std::fabs(e));
    return std::max(emax * emax, 1.0) * 1e-292;
}

// Solves (T - sigma) x = b by Gaussian elimination with partial pivoting
// (one fill-in superdiagonal), overwriting b with x.
void shifted_solve(const Tridiagonal& m, double sigma, std::vector<double>& b) {
    const std::size_t n = m.diag.size();
    std::vector<double> dl(n, 0.0), d(n), du(n, 0.0), du2(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        d[i] = m.diag[i] - sigma;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        dl[i + 1] = m.off[i];
        du[i] = m.off[i];
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::fabs(dl[i + 1]) > std::fabs(d[i])) {
            std::swap(d[i], dl[i + 1]);
            std::swap(du[i], d[i + 1]);
            if (i + 2 < n)
                du2[i] = du[i + 1], du[i + 1] = 0.0;
            std::swap(b[i], b[i + 1]);
        }
        if (d[i] == 0.0)
            d[i] = 1e-300;
        const double mult = dl[i + 1] / d[i];
        d[i + 1] -= mult * du[i];
        if (i + 2 < n)
            du[i + 1] -= mult * du2[i];
        b[i + 1] -= mult * b[i];
    }
    if (d[n - 1] == 0.0)
        d[n - 1] = 1e-300;
    b[n - 1] /= d[n - 1];
    if (n >= 2)
        b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (std::size_t k = n - 2; k-- > 0;)
        b[k] = (b[k] - du[k] * b[k + 1] - du2[k] * b[k + 2]) / d[k];
}

std::vector<double> eigenvector(const Tridiagonal& m, double lambda) {
    const std::size_t n = m.diag.size();
    std::vector<double> v(n, 1.0);
    double scale = 0.0;
    for (double x : m.diag)
        scale = std::max(scale, std::fabs(x));
    const double sigma = lambda + 1e-12 * std::max(1.0, scale) * 1e2;
    for (int iter = 0; iter < 3; ++iter) {
        shifted_solve(m, sigma, v);
        double norm = 0.0;
        for (double x : v)
            norm += x * x;
        norm = std::sqrt(norm);
        for (double& x : v)
            x /= norm;
    }
    return v;
}

int sign_changes(const std::vector<double>& v) {
    double vmax = 0.0;
    for (double x : v)
        vmax = std::max(vmax, std::fabs(x));
    const double floor = 1e-9 * vmax;
    int count = 0;
    double prev = 0.0;
    for (double x : v) {
        if (std::fabs(x) <= floor)
            continue;
        if (prev != 0.0 && x * prev < 0.0)
            ++count;
        prev = x;
    }
    return count;
}

} // namespace

Tridiagonal assemble_hamiltonian(const RadialProblem& problem, const Grid& grid) {
    if (grid.n < 16)
        throw Error(errc::grid_too_coarse, "need at least 16 grid points");
    check_cutoff(problem, grid.r_min);
    const double h = grid.spacing();
    const std::size_t interior = static_cast<std::size_t>(grid.n) - 2;
    Tridiagonal m;
    m.diag.resize(interior);
    m.off.assign(interior - 1, -0.5 / (h * h));
    for (std::size_t i = 0; i < interior; ++i) {
        const double r = grid.r_min + h * static_cast<double>(i + 1);
        m.diag[i] = 1.0 / (h * h) + effective_potential(problem, r);
    }
    return m;
}

int count_below(const Tridiagonal& m, double lambda) {
    return pencil_count_below(m.diag, m.off, nullptr, lambda, pivot_floor(m.off));
}

std::vector<double> lowest_eigenvalues(const Tridiagonal& m, int k) {
    if (k < 1 || k > static_cast<int>(m.diag.size()))
        throw Error(errc::domain_error, "k out of range");
    const double pivmin = pivot_floor(m.off);
    double lo = m.diag[0], hi = m.diag[0];
    for (std::size_t i = 0; i < m.diag.size(); ++i) {
        const double left = (i > 0) ? std::fabs(m.off[i - 1]) : 0.0;
        const double right = (i + 1 < m.diag.size()) ? std::fabs(m.off[i]) : 0.0;
        lo = std::min(lo, m.diag[i] - left - right);
        hi = std::max(hi, m.diag[i] + left + right);
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) {
        double a = lo, b = hi;
        for (int iter = 0; iter < 210; ++iter) {
            const double mid = 0.5 * (a + b);
            if (pencil_count_below(m.diag, m.off, nullptr, mid, pivmin) >= j)
                b = mid;
            else
                a = mid;
            if (b - a <= 1e-12 * std::max(1.0, std::fabs(mid)))
                break;
        }
        out.push_back(0.5 * (a + b));
    }
    return out;
}

ShootResult numerov_shoot(const RadialProblem& problem, double energy, const Grid& grid) {
    if (grid.n < 16)
        throw Error(errc::grid_too_coarse, "need at least 16 grid points");
    check_cutoff(problem, grid.r_min);
    const double h = grid.spacing();
    const std::size_t n = static_cast<std::size_t>(grid.n);
    std::vector<double> T(n); // (h^2/12) G_i with y'' = G y, G = 2(V - E)
    for (std::size_t i = 0; i < n; ++i) {
        const double r = grid.r_min + h * static_cast<double>(i);
        T[i] = (h * h / 12.0) * 2.0 * (effective_potential(problem, r) - energy);
    }

    // outermost classical turning point
    std::size_t match = n / 2;
    for (std::size_t i = n - 1; i-- > 0;) {
        if (T[i] <= 0.0) {
            match = std::clamp<std::size_t>(i, 2, n - 3);
            break;
        }
    }

    bool rescaled = false;
    auto step = [&](std::vector<double>& y, std::size_t i_prev, std::size_t i_cur,
                    std::size_t i_next) {
        y[i_next] = (2.0 * (1.0 + 5.0 * T[i_cur]) * y[i_cur] -
                     (1.0 - T[i_prev]) * y[i_prev]) /
                    (1.0 - T[i_next]);
    };

    std::vector<double> yo(n, 0.0), yi(n, 0.0);
    yo[0] = 0.0;
    yo[1] = h;
    for (std::size_t i = 1; i + 1 <= match + 1; ++i) {
        step(yo, i - 1, i, i + 1);
        if (std::fabs(yo[i + 1]) > 1e250) {
            for (std::size_t j = 0; j <= i + 1; ++j)
                yo[j] *= 1e-250;
            rescaled = true;
        }
    }
    yi[n - 1] = 0.0;
    yi[n - 2] = h;
    for (std::size_t i = n - 2; i >= match + 1; --i) {
        step(yi, i + 1, i, i - 1);
        if (std::fabs(yi[i - 1]) > 1e250) {
            for (std::size_t j = i - 1; j < n; ++j)
                yi[j] *= 1e-250;
            rescaled = true;
        }
        if (i == 1)
            break;
    }

    int nodes = 0;
    for (std::size_t i = 1; i + 1 <= match; ++i)
        if (yo[i] != 0.0 && yo[i + 1] != 0.0 && yo[i] * yo[i + 1] < 0.0)
            ++nodes;
    for (std::size_t i = match; i + 2 <= n - 1; ++i)
        if (yi[i] != 0.0 && yi[i + 1] != 0.0 && yi[i] * yi[i + 1] < 0.0)
            ++nodes;

    double mismatch = std::numeric_limits<double>::infinity();
    if (yo[match] != 0.0 && yi[match] != 0.0) {
        const double dout = (yo[match + 1] - yo[match - 1]) / (2.0 * h * yo[match]);
        const double din = (yi[match + 1] - yi[match - 1]) / (2.0 * h * yi[match]);
        mismatch = (dout - din) / (1.0 + std::fabs(dout) + std::fabs(din));
    }
    return ShootResult{nodes, mismatch, rescaled};
}

namespace {

std::vector<double> solve_eigenvalues(const RadialProblem& problem, const Grid& grid, int k,
                                      InnerBoundary boundary) {
    Tridiagonal m = assemble_hamiltonian(problem, grid);
    if (boundary == InnerBoundary::RegularOrigin) {
        const double s = problem.l_d + 1.0;
        const double h = grid.spacing();
        const double theta = grid.r_min / (grid.r_min + s * h);
        m.diag[0] -= theta * 0.5 / (h * h);
    }
    return lowest_eigenvalues(m, k);
}

} // namespace

SpectrumResult spectrum(const AtomConfig& config, const Grid& grid, int k,
                        const SpectrumOptions& options) {
    const RadialProblem problem = reduce(config);
    SpectrumResult result;
    result.grid = grid;

    Tridiagonal m = assemble_hamiltonian(problem, grid);
    double theta = 0.0;
    if (options.boundary == InnerBoundary::RegularOrigin) {
        const double s = problem.l_d + 1.0;
        theta = grid.r_min / (grid.r_min + s * grid.spacing());
        m.diag[0] -= theta * 0.5 / (grid.spacing() * grid.spacing());
    }
    result.eigenvalues = lowest_eigenvalues(m, k);

    const double h = grid.spacing();
    for (double lambda : result.eigenvalues) {
        std::vector<double> v = eigenvector(m, lambda);
        std::vector<double> full(static_cast<std::size_t>(grid.n), 0.0);
        std::copy(v.begin(), v.end(), full.begin() + 1);
        full.front() = theta * v.front();
        double norm = 0.0;
        for (double x : full)
            norm += x * x * h;
        norm = std::sqrt(norm);
        if (full[1] < 0.0)
            norm = -norm; // sign convention: positive slope at the inner end
        for (double& x : full)
            x /= norm;
        result.node_counts.push_back(sign_changes(full));
        result.wavefunctions.push_back(std::move(full));
    }

    if (options.cross_check) {
        const double e0 = result.eigenvalues.front();
        const double width = std::max(0.05 * std::fabs(e0), 1e-5);
        double a = e0 - width, b = e0 + width;
        auto mm = [&](double e) {
            return numerov_shoot(problem, e, grid).log_derivative_mismatch;
        };
        // locate a sign change around e0, then bisect
        const int scan = 32;
        double prev_e = a, prev_f = mm(a);
        bool found = false;
        for (int i = 1; i <= scan; ++i) {
            const double e = a + (b - a) * i / scan;
            const double f = mm(e);
            if (std::isfinite(prev_f) && std::isfinite(f) && prev_f * f < 0.0 &&
                std::fabs(prev_f) < 10.0 && std::fabs(f) < 10.0) {
                double lo = prev_e, hi = e, flo = prev_f;
                for (int iter = 0; iter < 80; ++iter) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = mm(mid);
                    if (flo * fm <= 0.0)
                        hi = mid;
                    else
                        lo = mid, flo = fm;
                }
                result.numerov_ground_energy = 0.5 * (lo + hi);
                found = true;
                break;
            }
            prev_e = e;
            prev_f = f;
        }
        if (found) {
            result.numerov_agrees =
                std::fabs(*result.numerov_ground_energy - e0) <=
                1e-3 * std::max(std::fabs(e0), 1e-12);
            result.rescaled = numerov_shoot(problem, e0, grid).rescaled;
        }
    }

    if (options.refine) {
        const Grid fine = make_grid(grid.r_min, grid.r_max, 2 * grid.n - 1);
        const std::vector<double> ef = solve_eigenvalues(problem, fine, k, options.boundary);
        std::vector<double> rich(static_cast<std::size_t>(k));
        bool conv = true;
        for (int i = 0; i < k; ++i) {
            const double c = result.eigenvalues[static_cast<std::size_t>(i)];
            const double f = ef[static_cast<std::size_t>(i)];
            rich[static_cast<std::size_t>(i)] = (4.0 * f - c) / 3.0;
            if (std::fabs(f - c) > 1e-6 * std::max(1e-12, std::fabs(f)))
                conv = false;
        }
        result.converged = conv;
        result.richardson_estimate = std::move(rich);
    }
    return result;
}

namespace {

CollapseClass classify(const std::vector<double>& energies) {
    const std::size_t m = energies.size();
    if (m < 4)
        throw Error(errc::domain_error, "collapse classification needs at least 4 cutoffs");
    for (std::size_t i = m - 4; i + 1 < m; ++i) {
        if (!(energies[i] < 0.0) || !(energies[i + 1] <= 2.0 * energies[i]))
            return CollapseClass::BoundedBelow;
    }
    return CollapseClass::Collapsing;
}

void check_cutoffs(const std::vector<double>& cutoffs, double r_max) {
    if (cutoffs.size() < 4)
        throw Error(errc::domain_error, "need at least 4 cutoffs");
    for (std::size_t i = 0; i < cutoffs.size(); ++i) {
        if (!(cutoffs[i] > 0.0) || !(cutoffs[i] < r_max))
            throw Error(errc::domain_error, "cutoffs must lie in (0, r_max)");
        if (i > 0 && !(cutoffs[i] < cutoffs[i - 1]))
            throw Error(errc::domain_error, "cutoffs must be strictly descending");
    }
}

} // namespace

CollapseStudy collapse_study(const AtomConfig& config, const std::vector<double>& cutoffs,
                             int grid_n, double r_max) {
    check_cutoffs(cutoffs, r_max);
    const RadialProblem problem = reduce(config);
    CollapseStudy study;
    study.cutoffs = cutoffs;
    study.grid_kind = GridKind::Uniform;
    study.grid_n = grid_n;
    study.r_max = r_max;
    for (double a : cutoffs) {
        const Grid grid = make_grid(a, r_max, grid_n);
        Tridiagonal m = assemble_hamiltonian(problem, grid);
        const double e0 = lowest_eigenvalues(m, 1).front();
        study.ground_energies.push_back(e0);
        study.bound_state_energies.push_back(std::min(e0, 0.0));
    }
    study.classification = classify(study.ground_energies);
    return study;
}

double ground_energy_geometric(const RadialProblem& problem, double r_min, double r_max, int n) {
    if (!(r_min > 0.0) || !(r_max > r_min))
        throw Error(errc::domain_error, "need 0 < r_min < r_max");
    if (n < 16)
        throw Error(errc::grid_too_coarse, "need at least 16 grid points");
    check_cutoff(problem, r_min);
    const double t0 = std::log(r_min), t1 = std::log(r_max);
    const double h = (t1 - t0) / (n - 1);
    const std::size_t interior = static_cast<std::size_t>(n) - 2;
    std::vector<double> diag(interior), w(interior);
    std::vector<double> off(interior - 1, -0.5 / (h * h));
    for (std::size_t i = 0; i < interior; ++i) {
        const double t = t0 + h * static_cast<double>(i + 1);
        diag[i] = 1.0 / (h * h) + 0.5 * (problem.centrifugal + 0.25) -
                  problem.kappa * std::exp((2.0 - problem.p) * t);
        w[i] = std::exp(2.0 * t);
    }
    const double pivmin = pivot_floor(off);

    // generalized Gershgorin bracket: lambda below min (diag_i - radius)/w_i is safe
    double lo = std::numeric_limits<double>::max();
    double hi = std::numeric_limits<double>::lowest();
    for (std::size_t i = 0; i < interior; ++i) {
        const double left = (i > 0) ? std::fabs(off[i - 1]) : 0.0;
        const double right = (i + 1 < interior) ? std::fabs(off[i]) : 0.0;
        lo = std::min(lo, (diag[i] - left - right) / w[i]);
        hi = std::max(hi, (diag[i] + left + right) / w[i]);
    }

    auto count = [&](double lambda) {
        return pencil_count_below(diag, off, &w, lambda, pivmin);
    };
    double a = lo, b = hi;
    for (int iter = 0; iter < 400; ++iter) {
        double mid;
        if (a < 0.0 && b < 0.0 && std::fabs(a) / std::fabs(b) > 4.0)
            mid = -std::sqrt(std::fabs(a) * std::fabs(b)); // geometric step spans the decades
        else
            mid = 0.5 * (a + b);
        if (count(mid) >= 1)
            b = mid;
        else
            a = mid;
        if (b - a <= 1e-12 * std::max(1.0, std::min(std::fabs(a), std::fabs(b))))
            break;
    }
    return 0.5 * (a + b);
}

CollapseStudy collapse_study_geometric(const AtomConfig& config,
                                       const std::vector<double>& cutoffs, int grid_n,
                                       double r_max) {
    check_cutoffs(cutoffs, r_max);
    const RadialProblem problem = reduce(config);
    CollapseStudy study;
    study.cutoffs = cutoffs;
    study.grid_kind = GridKind::Geometric;
    study.grid_n = grid_n;
    study.r_max = r_max;
    for (double a : cutoffs) {
        const double e0 = ground_energy_geometric(problem, a, r_max, grid_n);
        study.ground_energies.push_back(e0);
        study.bound_state_energies.push_back(std::min(e0, 0.0));
    }
    study.classification = classify(study.ground_energies);
    return study;
}

FlipBracket critical_charge_bracket(int l, const std::vector<double>& cutoffs, int grid_n,
                                    double r_max, double z_lo, double z_hi, double width) {
    auto collapsing = [&](double z) {
        const AtomConfig cfg = make_atom_config(4, z, l, PotentialSpec::gauss_law());
        return collapse_study_geometric(cfg, cutoffs, grid_n, r_max).classification ==
               CollapseClass::Collapsing;
    };
    if (collapsing(z_lo) || !collapsing(z_hi))
        throw Error(errc::domain_error, "flip not bracketed by [z_lo, z_hi]");
    while (z_hi - z_lo > width) {
        const double mid = 0.5 * (z_lo + z_hi);
        (collapsing(mid) ? z_hi : z_lo) = mid;
    }
    return FlipBracket{z_lo, z_hi};
}

} // namespace hdatom::eigen
