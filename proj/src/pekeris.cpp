#include "thspec/pekeris.hpp"
#include "thspec/error.hpp"
#include <cmath>
#include <fmt/format.h>

namespace thspec {

PekerisCoefficients pekeris_coefficients(double alpha, double c_h) {
  if (!(alpha > 0.0))
    fail(ErrorCode::InvalidArgument,
         fmt::format("Pekeris coefficients need alpha > 0 (got {})", alpha));
  const double m = 1.0 - c_h;
  const double a2 = alpha * alpha;
  PekerisCoefficients k;
  k.D0 = 1.0 - m * (3.0 + c_h) / alpha + 3.0 * m * m / a2;
  k.D1 = 2.0 * m * m * (2.0 + c_h) / alpha - 6.0 * m * m * m / a2;
  k.D2 = -m * m * m * (1.0 + c_h) / alpha + 3.0 * m * m * m * m / a2;
  return k;
}

PekerisCoefficients pekeris_coefficients(const ThPotential &pot) {
  return pekeris_coefficients(pot.alpha(), pot.c_h());
}

double centrifugal_exact(double eta, double r) {
  if (!(r > 0.0))
    fail(ErrorCode::InvalidArgument, "centrifugal term needs r > 0");
  return eta / (r * r);
}

double centrifugal_pekeris(double eta, const ThPotential &pot,
                           const PekerisCoefficients &coeffs, double r) {
  const double u = pot.s_of_r(r);
  const double den = 1.0 - pot.c_h() * u;
  if (den == 0.0)
    fail(ErrorCode::PoleInDomain,
         fmt::format("Pekeris term has a pole at r = {}", r));
  const double y = u / den;
  const double re2 = pot.r_e() * pot.r_e();
  return eta / re2 * (coeffs.D0 + coeffs.D1 * y + coeffs.D2 * y * y);
}

bool pekeris_beyond_validity(const ThPotential &pot, double r) noexcept {
  return std::abs((r - pot.r_e()) / pot.r_e()) > pekeris_validity_limit;
}

} // namespace thspec
