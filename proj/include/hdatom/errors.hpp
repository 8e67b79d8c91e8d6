#pragma once

#include <stdexcept>
#include <string>

namespace hdatom {

/// Error codes for every failure mode the library can report.
enum class errc {
    dimension_too_low,
    non_positive_charge,
    negative_l,
    non_positive_radius,
    non_positive_rho,
    length_mismatch,
    scaling_undefined,
    positive_energy,
    unsupported_dimension,
    domain_error,
    grid_too_coarse,
    cutoff_too_small,
    quadrature_divergent,
    no_convergence,
    internal
};

const char* to_string(errc code);

/// Single exception type; the code distinguishes the named error conditions.
class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

} // namespace hdatom
