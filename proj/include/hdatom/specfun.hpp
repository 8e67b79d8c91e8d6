#pragma once

#include "hdatom/errors.hpp"

namespace hdatom::specfun {

enum class BesselRegime { AscendingSeries, Asymptotic, HalfIntegerClosedForm };

const char* to_string(BesselRegime regime);

/// One evaluation of I_nu or K_nu with the regime used and an error estimate.
struct BesselEval {
    double order;
    double argument;
    double value;
    BesselRegime regime_used;
    double est_error; // estimated relative error
};

/// Modified Bessel function of the first kind, nu >= 0, x > 0.
/// Ascending series sum (x/2)^{2k+nu} / (k! Gamma(k+nu+1)) up to the switch point
/// x_switch = max(16, 2 nu^2), large-x expansion (with the reflection term) beyond.
BesselEval bessel_i(double nu, double x);

/// Modified Bessel function of the second kind; even in nu, so any real nu is
/// accepted and |nu| is used. For non-integer order the reflection formula
/// K_nu = pi (I_{-nu} - I_nu) / (2 sin(pi nu)) evaluated in compensated arithmetic;
/// integer order uses the standard logarithmic series; near-integer order (within
/// 3e-6) interpolates across the integer from offsets +-1e-5; half-integer order
/// uses the exact closed form; large x the asymptotic expansion.
BesselEval bessel_k(double nu, double x);

/// dI_nu/dx = I_{nu+1} + (nu/x) I_nu.
double bessel_i_prime(double nu, double x);

/// dK_nu/dx = -K_{nu+1} + (nu/x) K_nu.
double bessel_k_prime(double nu, double x);

namespace detail {

/// Extended-precision values for test oracles (finite-difference residual checks
/// need samples well below the double rounding floor).
long double bessel_i_ld(double nu, double x);
long double bessel_k_ld(double nu, double x);

/// Same, with the series/asymptotic branch pinned by the caller so that a
/// finite-difference stencil never straddles the switch point.
long double bessel_i_ld(double nu, double x, bool asymptotic_side);
long double bessel_k_ld(double nu, double x, bool asymptotic_side);
bool i_asymptotic_at(double nu, double x);
bool k_asymptotic_at(double nu, double x);

} // namespace detail

} // namespace hdatom::specfun
