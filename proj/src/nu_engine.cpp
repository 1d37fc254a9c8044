#include "thspec/nu_engine.hpp"
#include "thspec/error.hpp"
#include <cmath>
#include <fmt/format.h>

namespace thspec {

namespace {

// Round-off can push a radicand that is zero in exact arithmetic slightly
// negative; those are clamped, anything larger is a genuine failure.
double checked_radicand(double v, double scale, const char *name) {
  if (v >= 0.0)
    return v;
  if (v > -1e-13 * (1.0 + scale))
    return 0.0;
  fail(ErrorCode::NegativeRadicand,
       fmt::format("{} = {} < 0: no real bound-state solution", name, v));
}

} // namespace

NuConstants derive_constants(const NuProblem &p, RadicalSigns signs) {
  if (p.c3 == 0.0)
    fail(ErrorCode::C3Zero, "c3 = 0 needs the Morse closed forms");
  NuConstants k;
  k.c1 = p.c1;
  k.c2 = p.c2;
  k.c3 = p.c3;
  k.signs = signs;
  k.c4 = 0.5 * (1.0 - p.c1);
  k.c5 = 0.5 * (p.c2 - 2.0 * p.c3);
  k.c6 = k.c5 * k.c5 + p.xi1;
  k.c7 = 2.0 * k.c4 * k.c5 - p.xi2;
  k.c8 = k.c4 * k.c4 + p.xi3;
  k.c9 = p.c3 * (k.c7 + p.c3 * k.c8) + k.c6;
  const double scale8 = k.c4 * k.c4 + std::abs(p.xi3);
  const double scale9 = std::abs(p.c3 * k.c7) + std::abs(p.c3 * p.c3 * k.c8) +
                        std::abs(k.c6);
  k.validity.c8_nonnegative = k.c8 >= 0.0;
  k.validity.c9_nonnegative = k.c9 >= 0.0;
  k.root8 = signs.s8 * std::sqrt(checked_radicand(k.c8, scale8, "c8"));
  k.root9 = signs.s9 * std::sqrt(checked_radicand(k.c9, scale9, "c9"));
  k.c10 = p.c1 + 2.0 * k.c4 + 2.0 * k.root8 - 1.0;
  k.c11 = 1.0 - p.c1 - 2.0 * k.c4 + 2.0 / p.c3 * k.root9;
  k.c12 = k.c4 + k.root8;
  k.c13 = -k.c4 + (k.root9 - k.c5) / p.c3;
  k.validity.c10_above_minus_one = k.c10 > -1.0;
  k.validity.c11_above_minus_one = k.c11 > -1.0;
  k.validity.c12_positive = k.c12 > 0.0;
  k.validity.c13_positive = k.c13 > 0.0;
  return k;
}

ResidualValue energy_residual_terms(const NuConstants &k, int n) {
  if (n < 0)
    fail(ErrorCode::InvalidArgument, "radial quantum number must be >= 0");
  const double m = 2.0 * n + 1.0;
  const double terms[] = {
      k.c2 * n,
      -m * k.c5,
      m * k.root9,
      m * k.c3 * k.root8,
      n * (n - 1.0) * k.c3,
      k.c7,
      2.0 * k.c3 * k.c8,
      2.0 * k.root8 * k.root9,
  };
  ResidualValue r;
  for (double t : terms) {
    r.value += t;
    r.scale += std::abs(t);
  }
  return r;
}

double energy_residual(const NuProblem &p, int n, RadicalSigns signs) {
  return energy_residual_terms(derive_constants(p, signs), n).value;
}

NuIntermediates nu_intermediates(const NuConstants &k, const NuProblem &p) {
  const double lin = k.root9 + p.c3 * k.root8;
  NuIntermediates m;
  m.pi0 = k.c4 + k.root8;
  m.pi1 = k.c5 - lin;
  m.k = -(k.c7 + 2.0 * p.c3 * k.c8) - 2.0 * k.root8 * k.root9;
  m.tau0 = p.c1 + 2.0 * k.c4 + 2.0 * k.root8;
  m.tau1 = -(p.c2 - 2.0 * k.c5) - 2.0 * lin;
  m.tau_prime = -2.0 * p.c3 - 2.0 * lin;
  return m;
}

WavefunctionParams wavefunction_params(const NuConstants &k) {
  if (!(k.c12 > 0.0))
    fail(ErrorCode::InvalidExponent,
         fmt::format("c12 = {} <= 0: no decay as s -> 0", k.c12));
  if (k.c3 > 0.0 && !(k.c13 > 0.0))
    fail(ErrorCode::InvalidExponent,
         fmt::format("c13 = {} <= 0 with c3 > 0: singular at s = 1/c3",
                     k.c13));
  return {k.c12, k.c13, k.c10, k.c11};
}

} // namespace thspec
