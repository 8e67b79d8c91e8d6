#pragma once

#include <functional>

namespace hdatom {

/// Adaptive Simpson quadrature on [a, b] to absolute tolerance tol.
double integrate(const std::function<double(double)>& f, double a, double b, double tol);

} // namespace hdatom
