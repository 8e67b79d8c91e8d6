#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "hdatom/potentials.hpp"
#include "hdatom/reduction.hpp"

using namespace hdatom;

TEST_CASE("reduced_l recovers the textbook l at d=3 and the paper values") {
    for (int l : {0, 1, 2})
        CHECK(reduced_l(3, l) == static_cast<double>(l));
    CHECK(reduced_l(4, 0) == 0.5);
    CHECK(reduced_l(5, 1) == 2.0);
}

TEST_CASE("centrifugal coefficient: worked cases") {
    CHECK(centrifugal_coefficient(3, 0) == 0.0);
    CHECK(centrifugal_coefficient(4, 0) == 0.75);
    CHECK(centrifugal_coefficient(6, 1) == 35.0 / 4.0);
}

TEST_CASE("centrifugal identity holds exactly on the full lattice") {
    for (int d = 3; d <= 12; ++d) {
        for (int l = 0; l <= 6; ++l) {
            const double direct = centrifugal_coefficient(d, l);
            const double identity = l * (l + d - 2) + (d - 1) * (d - 3) / 4.0;
            CHECK(direct == identity); // exact equality in binary floating point
        }
    }
}

TEST_CASE("reduce produces the expected radial problems") {
    SUBCASE("textbook hydrogen with coupling override") {
        const auto cfg = make_atom_config(3, 1.0, 0, PotentialSpec::gauss_law(1.0));
        const RadialProblem p = reduce(cfg);
        CHECK(p.centrifugal == 0.0);
        CHECK(p.kappa == 1.0);
        CHECK(p.p == 1.0);
    }
    SUBCASE("d=5 GaussLaw") {
        const auto cfg = make_atom_config(5, 1.0, 0, PotentialSpec::gauss_law());
        const RadialProblem p = reduce(cfg);
        CHECK(p.centrifugal == 2.0);
        CHECK(p.kappa == doctest::Approx(1.0 / (8.0 * std::numbers::pi * std::numbers::pi))
                             .epsilon(1e-14));
        CHECK(p.p == 3.0);
    }
    SUBCASE("d=4 GaussLaw") {
        const auto cfg = make_atom_config(4, 1.0, 0, PotentialSpec::gauss_law());
        const RadialProblem p = reduce(cfg);
        CHECK(p.centrifugal == 0.75);
        CHECK(p.kappa == doctest::Approx(1.0 / (4.0 * std::numbers::pi * std::numbers::pi))
                             .epsilon(1e-14));
        CHECK(p.p == 2.0);
    }
}

namespace {

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = a + (b - a) * i / (n - 1);
    return v;
}

} // namespace

TEST_CASE("to_wavefunction worked cases") {
    const auto grid = linspace(0.1, 10.0, 300);

    SUBCASE("d=3: f = r e^{-r} -> R = e^{-r}") {
        std::vector<double> f(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            f[i] = grid[i] * std::exp(-grid[i]);
        const auto R = to_wavefunction(f, grid, 3);
        for (std::size_t i = 0; i < grid.size(); ++i)
            CHECK(R[i] == doctest::Approx(std::exp(-grid[i])).epsilon(1e-14));
    }
    SUBCASE("d=4: f = 1 -> R = r^{-3/2}") {
        const std::vector<double> f(grid.size(), 1.0);
        const auto R = to_wavefunction(f, grid, 4);
        for (std::size_t i = 0; i < grid.size(); ++i)
            CHECK(R[i] == doctest::Approx(std::pow(grid[i], -1.5)).epsilon(1e-14));
    }
    SUBCASE("d=7: f = r^3 -> R = 1") {
        std::vector<double> f(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            f[i] = grid[i] * grid[i] * grid[i];
        const auto R = to_wavefunction(f, grid, 7);
        for (std::size_t i = 0; i < grid.size(); ++i)
            CHECK(R[i] == doctest::Approx(1.0).epsilon(1e-13));
    }
    SUBCASE("length mismatch") {
        CHECK_THROWS_AS(to_wavefunction({1.0, 2.0}, grid, 3), Error);
    }
}

TEST_CASE("round trip restores f to an ulp per sample") {
    const auto grid = linspace(0.05, 20.0, 500);
    for (int d : {3, 4, 5, 8}) {
        std::vector<double> f(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            f[i] = std::pow(grid[i], 1.3) * std::exp(-0.7 * grid[i]);
        const auto R = to_wavefunction(f, grid, d);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double back = std::pow(grid[i], 0.5 * (d - 1)) * R[i];
            CHECK(back == doctest::Approx(f[i]).epsilon(4e-15));
        }
    }
}

TEST_CASE("measure preservation: trapezoid of |R|^2 r^{d-1} equals that of f^2") {
    const auto grid = linspace(0.02, 30.0, 2000);
    const double h = grid[1] - grid[0];
    for (int d : {3, 5, 9}) {
        std::vector<double> f(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            f[i] = grid[i] * std::exp(-grid[i]) * (1.0 + 0.3 * std::sin(grid[i]));
        const auto R = to_wavefunction(f, grid, d);
        double lhs = 0.0, rhs = 0.0;
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            auto weight = [&](std::size_t j) {
                return R[j] * R[j] * std::pow(grid[j], static_cast<double>(d - 1));
            };
            lhs += 0.5 * h * (weight(i) + weight(i + 1));
            rhs += 0.5 * h * (f[i] * f[i] + f[i + 1] * f[i + 1]);
        }
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("dimensionless scaling exponents and the d=4 failure") {
    SUBCASE("d=3") {
        const auto cfg = make_atom_config(3, 1.0, 0, PotentialSpec::gauss_law());
        const auto s = dimensionless_scale(reduce(cfg), -0.5);
        CHECK(s.rho_exponent.num == 1);
        CHECK(s.rho_exponent.den == 1);
        CHECK(s.lambda_exponent.num == 0);
        CHECK(s.lambda_sq == 1.0);
    }
    SUBCASE("d=5") {
        const auto cfg = make_atom_config(5, 1.0, 0, PotentialSpec::gauss_law());
        const auto s = dimensionless_scale(reduce(cfg), -1.0);
        CHECK(s.rho_exponent.value() == -1.0);
        CHECK(s.lambda_exponent.value() == 2.0);
        CHECK(s.lambda_sq == 2.0);
    }
    SUBCASE("d=4 is the singular case") {
        const auto cfg = make_atom_config(4, 1.0, 0, PotentialSpec::gauss_law());
        CHECK_THROWS_WITH_AS(dimensionless_scale(reduce(cfg), -1.0),
                             doctest::Contains("ScalingUndefined"), Error);
    }
    SUBCASE("positive energy rejected") {
        const auto cfg = make_atom_config(5, 1.0, 0, PotentialSpec::gauss_law());
        CHECK_THROWS_WITH_AS(dimensionless_scale(reduce(cfg), 0.5),
                             doctest::Contains("PositiveEnergy"), Error);
    }
}
