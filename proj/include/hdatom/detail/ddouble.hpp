#pragma once

// Compensated double-double arithmetic (~32 significant digits), used internally by
// the special-function module: the reflection formula for K loses ~e^{2x} of relative
// precision to cancellation, which plain doubles cannot absorb at the tolerances the
// library commits to. Algorithms follow Dekker/Knuth error-free transforms.

#include <cmath>
#include <cstdint>

namespace hdatom::detail {

struct dd {
    double hi = 0.0;
    double lo = 0.0;

    dd() = default;
    dd(double h) : hi(h), lo(0.0) {}
    dd(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi; }
    long double to_long_double() const {
        return static_cast<long double>(hi) + static_cast<long double>(lo);
    }
};

inline dd two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return dd(s, (a - (s - bb)) + (b - bb));
}

inline dd quick_two_sum(double a, double b) {
    const double s = a + b;
    return dd(s, b - (s - a));
}

inline dd two_prod(double a, double b) {
    const double p = a * b;
    return dd(p, std::fma(a, b, -p));
}

inline dd operator+(const dd& a, const dd& b) {
    dd s = two_sum(a.hi, b.hi);
    dd t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(const dd& a) { return dd(-a.hi, -a.lo); }
inline dd operator-(const dd& a, const dd& b) { return a + (-b); }

inline dd operator*(const dd& a, const dd& b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(const dd& a, const dd& b) {
    const double q1 = a.hi / b.hi;
    dd r = a - dd(q1) * b;
    const double q2 = r.hi / b.hi;
    r = r - dd(q2) * b;
    const double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return q + dd(q3);
}

inline dd& operator+=(dd& a, const dd& b) { return a = a + b; }
inline dd& operator-=(dd& a, const dd& b) { return a = a - b; }
inline dd& operator*=(dd& a, const dd& b) { return a = a * b; }
inline dd& operator/=(dd& a, const dd& b) { return a = a / b; }

inline bool operator<(const dd& a, const dd& b) {
    return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(const dd& a, const dd& b) { return b < a; }

inline dd fabs(const dd& a) { return a.hi < 0.0 ? -a : a; }

inline dd ldexp(const dd& a, int n) { return dd(std::ldexp(a.hi, n), std::ldexp(a.lo, n)); }

inline const dd dd_pi(3.141592653589793, 1.2246467991473532e-16);
inline const dd dd_ln2(0.6931471805599453, 2.3190468138462996e-17);
inline const dd dd_euler(0.5772156649015329, -4.942915152430645e-18);

dd exp(const dd& x);
dd log(const dd& x);

/// sin(pi * nu) for a double nu, computed from the exactly reduced fraction.
dd sinpi(double nu);

/// log Gamma(1 + mu) for |mu| <= 0.5.
dd lngamma_1p(const dd& mu);

/// Gamma(1 + t) for |t| < 60, t not a negative integer.
dd gamma_1p(double t);

} // namespace hdatom::detail
