#include "hdatom/specfun.hpp"

#include <cmath>
#include <limits>

#include "hdatom/detail/ddouble.hpp"

namespace hdatom::specfun {

using hdatom::detail::dd;

const char* to_string(BesselRegime regime) {
    switch (regime) {
        case BesselRegime::AscendingSeries: return "AscendingSeries";
        case BesselRegime::Asymptotic: return "Asymptotic";
        case BesselRegime::HalfIntegerClosedForm: return "HalfIntegerClosedForm";
    }
    return "Unknown";
}

namespace {

constexpr double switch_floor = 16.0;
constexpr double near_integer_band = 3e-6;
constexpr double interp_offset = 1e-5;

double i_switch(double nu) { return std::max(switch_floor, 2.0 * nu * nu); }
double k_switch(double nu) { return std::max(switch_floor, 4.0 * nu); }

bool is_integer(double nu) { return nu == std::nearbyint(nu); }
bool is_half_integer(double nu) {
    const double two = 2.0 * nu;
    return two == std::nearbyint(two) && !is_integer(nu);
}

// Ascending series in compensated arithmetic; valid for nu > -60 non-negative-integer
// offsets handled through the Gamma recurrence. Converges for every x; used below the
// switch point where its term count stays modest.
dd i_series_dd(double nu, double x) {
    const dd xh = dd(x) * dd(0.5);
    const dd z = xh * xh;
    dd first = hdatom::detail::exp(dd(nu) * hdatom::detail::log(xh)) /
               hdatom::detail::gamma_1p(nu);
    dd sum = first;
    dd term = first;
    for (int k = 1; k < 600; ++k) {
        term = term * z / (dd(static_cast<double>(k)) * (dd(static_cast<double>(k)) + dd(nu)));
        sum += term;
        if (std::fabs(term.hi) < 1e-35 * std::fabs(sum.hi))
            break;
    }
    return sum;
}

struct AsymptoticSums {
    long double alternating; // sum (-1)^k a_k(nu) / x^k
    long double plain;       // sum a_k(nu) / x^k
    long double last_term;   // magnitude of the final retained term
};

AsymptoticSums asymptotic_sums(double nu, double x) {
    const long double mu4 = 4.0L * nu * nu;
    long double t = 1.0L;
    long double alt = 1.0L, plain = 1.0L, last = 0.0L;
    long double prev = std::numeric_limits<long double>::max();
    for (int k = 1; k < 200; ++k) {
        t *= (mu4 - (2.0L * k - 1.0L) * (2.0L * k - 1.0L)) / (8.0L * k * x);
        const long double mag = std::fabs(t);
        if (mag > prev)
            break; // divergent tail reached: stop at the smallest term
        prev = mag;
        plain += t;
        alt += (k % 2 == 0) ? t : -t;
        last = mag;
        if (mag < 1e-22L * std::fabs(plain))
            break;
    }
    return {alt, plain, last};
}

long double k_asymptotic_ld(double nu, double x) {
    const AsymptoticSums s = asymptotic_sums(nu, x);
    const long double pref =
        std::sqrt(hdatom::detail::dd_pi.to_long_double() / (2.0L * x)) * std::exp(-(long double)x);
    return pref * s.plain;
}

long double i_asymptotic_ld(double nu, double x) {
    const AsymptoticSums s = asymptotic_sums(nu, x);
    const long double root = std::sqrt(2.0L * hdatom::detail::dd_pi.to_long_double() * x);
    const long double sp = hdatom::detail::sinpi(nu).to_long_double();
    return (std::exp((long double)x) * s.alternating -
            sp * std::exp(-(long double)x) * s.plain) /
           root;
}

// K_n for integer n >= 0 via the standard logarithmic series (x below the switch).
dd k_integer_dd(int n, double x) {
    const dd xh = dd(x) * dd(0.5);
    const dd z = xh * xh; // x^2/4
    const dd lnxh = hdatom::detail::log(xh);

    // finite part: (1/2) (x/2)^{-n} sum_{k=0}^{n-1} (n-k-1)!/k! (-x^2/4)^k
    dd finite(0.0);
    if (n > 0) {
        dd fact(1.0); // (n-1)!
        for (int j = 2; j < n; ++j)
            fact = fact * dd(static_cast<double>(j));
        dd term = fact; // (n-k-1)!/k! (-z)^k at k=0
        finite = term;
        for (int k = 1; k < n; ++k) {
            // ratio: *(-z) * k? No: term_k = term_{k-1} * (-z) / (k (n-k))
            term = term * (-z) / dd(static_cast<double>(k) * static_cast<double>(n - k));
            finite += term;
        }
        finite = finite * dd(0.5) * hdatom::detail::exp(dd(-static_cast<double>(n)) * lnxh);
    }

    // psi-weighted ascending part
    dd harm_k(0.0);                 // H_k
    dd harm_nk(0.0);                // H_{n+k}
    for (int j = 1; j <= n; ++j)
        harm_nk += dd(1.0) / dd(static_cast<double>(j));
    dd fact_k(1.0);                 // k!
    dd fact_nk(1.0);                // (n+k)!
    for (int j = 2; j <= n; ++j)
        fact_nk = fact_nk * dd(static_cast<double>(j));
    const dd two_euler = hdatom::detail::dd_euler + hdatom::detail::dd_euler;
    dd zp(1.0); // z^k
    dd psi_sum(0.0);
    for (int k = 0; k < 400; ++k) {
        if (k > 0) {
            harm_k += dd(1.0) / dd(static_cast<double>(k));
            harm_nk += dd(1.0) / dd(static_cast<double>(n + k));
            fact_k = fact_k * dd(static_cast<double>(k));
            fact_nk = fact_nk * dd(static_cast<double>(n + k));
            zp = zp * z;
        }
        const dd term = (harm_k + harm_nk - two_euler) * zp / (fact_k * fact_nk);
        psi_sum += term;
        if (k > 3 && std::fabs(term.hi) < 1e-35 * (std::fabs(psi_sum.hi) + 1e-300))
            break;
    }
    const dd sign = (n % 2 == 0) ? dd(1.0) : dd(-1.0);
    const dd in = i_series_dd(static_cast<double>(n), x);
    dd out = finite - sign * lnxh * in +
             sign * dd(0.5) * hdatom::detail::exp(dd(static_cast<double>(n)) * lnxh) * psi_sum;
    return out;
}

// Reflection formula in compensated arithmetic; nu non-integer.
dd k_reflection_dd(double nu, double x) {
    const dd im = i_series_dd(-nu, x);
    const dd ip = i_series_dd(nu, x);
    return hdatom::detail::dd_pi * (im - ip) / (dd(2.0) * hdatom::detail::sinpi(nu));
}

// Exact closed form for half-integer order: K_{m+1/2}, finite positive sum.
long double k_half_integer_ld(double nu, double x) {
    const int m = static_cast<int>(std::nearbyint(nu - 0.5));
    const long double pref =
        std::sqrt(hdatom::detail::dd_pi.to_long_double() / (2.0L * x)) * std::exp(-(long double)x);
    long double sum = 1.0L, term = 1.0L;
    for (int j = 1; j <= m; ++j) {
        // (m+j)! / (j! (m-j)!) / (2x)^j, built by the term ratio
        term *= static_cast<long double>((m + j) * (m - j + 1)) / (2.0L * j * x);
        sum += term;
    }
    return pref * sum;
}

enum class KPath { Auto, SeriesSide, AsymptoticSide };

long double k_ld_impl(double nu, double x, KPath path) {
    nu = std::fabs(nu);
    if (is_half_integer(nu))
        return k_half_integer_ld(nu, x);
    const bool asym = (path == KPath::Auto) ? (x > k_switch(nu)) : (path == KPath::AsymptoticSide);
    if (asym)
        return k_asymptotic_ld(nu, x);
    if (is_integer(nu))
        return k_integer_dd(static_cast<int>(std::nearbyint(nu)), x).to_long_double();
    const double n = std::nearbyint(nu);
    if (n >= 0.0 && std::fabs(nu - n) < near_integer_band) {
        // quadratic interpolation in nu across the integer
        const double x0 = n - interp_offset, x2 = n + interp_offset;
        const long double f0 = k_reflection_dd(x0, x).to_long_double();
        const long double f1 = k_integer_dd(static_cast<int>(n), x).to_long_double();
        const long double f2 = k_reflection_dd(x2, x).to_long_double();
        const long double t = (nu - n) / interp_offset; // in (-1, 1)
        return f1 + 0.5L * t * (f2 - f0) + 0.5L * t * t * (f2 - 2.0L * f1 + f0);
    }
    return k_reflection_dd(nu, x).to_long_double();
}

long double i_ld_impl(double nu, double x, KPath path) {
    const bool asym = (path == KPath::Auto) ? (x > i_switch(nu)) : (path == KPath::AsymptoticSide);
    if (asym)
        return i_asymptotic_ld(nu, x);
    return i_series_dd(nu, x).to_long_double();
}

void check_domain(double nu, double x, bool require_nonneg_order) {
    if (!std::isfinite(nu) || !std::isfinite(x))
        throw Error(errc::domain_error, "non-finite Bessel argument");
    if (require_nonneg_order && nu < 0.0)
        throw Error(errc::domain_error, "order must be non-negative");
    if (!(x > 0.0))
        throw Error(errc::domain_error, "argument must be positive");
}

} // namespace

BesselEval bessel_i(double nu, double x) {
    check_domain(nu, x, true);
    BesselEval ev{nu, x, 0.0, BesselRegime::AscendingSeries, 2.5e-16};
    if (x > i_switch(nu)) {
        const AsymptoticSums s = asymptotic_sums(nu, x);
        const long double root = std::sqrt(2.0L * hdatom::detail::dd_pi.to_long_double() * x);
        const long double sp = hdatom::detail::sinpi(nu).to_long_double();
        const long double v =
            (std::exp((long double)x) * s.alternating - sp * std::exp(-(long double)x) * s.plain) /
            root;
        ev.value = static_cast<double>(v);
        ev.regime_used = BesselRegime::Asymptotic;
        ev.est_error = static_cast<double>(s.last_term / std::fabs(s.alternating)) + 3e-16;
    } else {
        ev.value = static_cast<double>(i_series_dd(nu, x).to_long_double());
        ev.est_error = 2.5e-16;
    }
    return ev;
}

BesselEval bessel_k(double nu, double x) {
    check_domain(nu, x, false);
    nu = std::fabs(nu); // K is even in the order
    BesselEval ev{nu, x, 0.0, BesselRegime::AscendingSeries, 2.5e-16};
    if (is_half_integer(nu)) {
        ev.value = static_cast<double>(k_half_integer_ld(nu, x));
        ev.regime_used = BesselRegime::HalfIntegerClosedForm;
        ev.est_error = (std::nearbyint(nu - 0.5) + 2.0) * 1.5e-16;
        return ev;
    }
    if (x > k_switch(nu)) {
        const AsymptoticSums s = asymptotic_sums(nu, x);
        const long double pref =
            std::sqrt(hdatom::detail::dd_pi.to_long_double() / (2.0L * x)) *
            std::exp(-(long double)x);
        ev.value = static_cast<double>(pref * s.plain);
        ev.regime_used = BesselRegime::Asymptotic;
        ev.est_error = static_cast<double>(s.last_term / std::fabs(s.plain)) + 3e-16;
        return ev;
    }
    ev.value = static_cast<double>(k_ld_impl(nu, x, KPath::SeriesSide));
    // reflection-formula conditioning: eps_dd e^{2x} / |2 sin(pi nu)| against K itself
    const double n = std::nearbyint(nu);
    const double sin_scale =
        is_integer(nu) ? 1.0
                       : std::max(std::fabs(std::sin(hdatom::detail::dd_pi.hi * (nu - n))),
                                  std::sin(hdatom::detail::dd_pi.hi * interp_offset));
    const double cancel =
        1.3e-32 * std::exp(2.0 * std::min(x, 350.0)) / (sin_scale * std::max(ev.value, 1e-300));
    ev.est_error = std::max(2.5e-16, std::min(cancel, 1.0));
    return ev;
}

double bessel_i_prime(double nu, double x) {
    return bessel_i(nu + 1.0, x).value + (nu / x) * bessel_i(nu, x).value;
}

double bessel_k_prime(double nu, double x) {
    nu = std::fabs(nu);
    return -bessel_k(nu + 1.0, x).value + (nu / x) * bessel_k(nu, x).value;
}

namespace detail {

long double bessel_i_ld(double nu, double x) {
    check_domain(nu, x, true);
    return i_ld_impl(nu, x, KPath::Auto);
}

long double bessel_k_ld(double nu, double x) {
    check_domain(nu, x, false);
    return k_ld_impl(std::fabs(nu), x, KPath::Auto);
}

long double bessel_i_ld(double nu, double x, bool asymptotic_side) {
    check_domain(nu, x, true);
    return i_ld_impl(nu, x, asymptotic_side ? KPath::AsymptoticSide : KPath::SeriesSide);
}

long double bessel_k_ld(double nu, double x, bool asymptotic_side) {
    check_domain(nu, x, false);
    return k_ld_impl(std::fabs(nu), x, asymptotic_side ? KPath::AsymptoticSide : KPath::SeriesSide);
}

bool i_asymptotic_at(double nu, double x) { return x > i_switch(nu); }
bool k_asymptotic_at(double nu, double x) { return x > k_switch(std::fabs(nu)); }

} // namespace detail

} // namespace hdatom::specfun
