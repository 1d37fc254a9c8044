#pragma once

#include "thspec/core_types.hpp"

namespace thspec {

// Coefficients of eta/r^2 ~ (eta/r_e^2)[D0 + D1 y + D2 y^2], y = u/(1 - c_h u),
// matched to second order at r = r_e.
struct PekerisCoefficients {
  double D0 = 0.0;
  double D1 = 0.0;
  double D2 = 0.0;
};

PekerisCoefficients pekeris_coefficients(double alpha, double c_h);
PekerisCoefficients pekeris_coefficients(const ThPotential &pot);

double centrifugal_exact(double eta, double r);
double centrifugal_pekeris(double eta, const ThPotential &pot,
                           const PekerisCoefficients &coeffs, double r);

// The expansion is only trusted near equilibrium; |x| > 0.5 gets flagged.
inline constexpr double pekeris_validity_limit = 0.5;
bool pekeris_beyond_validity(const ThPotential &pot, double r) noexcept;

} // namespace thspec
