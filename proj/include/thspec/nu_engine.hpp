#pragma once

namespace thspec {

//==============================================================================
// Parametric Nikiforov-Uvarov template
//   psi'' + (c1 - c2 s)/(s (1 - c3 s)) psi'
//         + (-xi1 s^2 + xi2 s - xi3)/(s (1 - c3 s))^2 psi = 0.
// The engine never sees energies; callers embed E in the xi's.
struct NuProblem {
  double c1 = 1.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double xi1 = 0.0;
  double xi2 = 0.0;
  double xi3 = 0.0;
};

// Signs attached to sqrt(c8) and sqrt(c9). {+1, +1} is the textbook branch
// that yields decaying, normalizable solutions; other choices select the
// remaining roots of the pi(s) quadratic.
struct RadicalSigns {
  int s8 = 1;
  int s9 = 1;
};

struct NuValidity {
  bool c8_nonnegative = false;
  bool c9_nonnegative = false;
  bool c10_above_minus_one = false;
  bool c11_above_minus_one = false;
  bool c12_positive = false;
  bool c13_positive = false;
};

struct NuConstants {
  double c4 = 0.0, c5 = 0.0, c6 = 0.0, c7 = 0.0, c8 = 0.0, c9 = 0.0;
  double c10 = 0.0, c11 = 0.0, c12 = 0.0, c13 = 0.0;
  double c1 = 1.0, c2 = 0.0, c3 = 0.0;
  double root8 = 0.0; // signed sqrt(c8)
  double root9 = 0.0; // signed sqrt(c9)
  RadicalSigns signs;
  NuValidity validity;
};

struct NuIntermediates {
  double pi0 = 0.0, pi1 = 0.0;   // pi(s) = pi0 + pi1 s
  double k = 0.0;
  double tau0 = 0.0, tau1 = 0.0; // tau(s) = tau0 + tau1 s
  double tau_prime = 0.0;
};

struct WavefunctionParams {
  double exponent_s = 0.0;     // c12
  double exponent_1mc3s = 0.0; // c13
  double jacobi_a = 0.0;       // c10
  double jacobi_b = 0.0;       // c11
};

struct ResidualValue {
  double value = 0.0;
  double scale = 0.0; // sum of term magnitudes, for relative tests
};

NuConstants derive_constants(const NuProblem &p, RadicalSigns signs = {});

ResidualValue energy_residual_terms(const NuConstants &k, int n);
double energy_residual(const NuProblem &p, int n, RadicalSigns signs = {});

NuIntermediates nu_intermediates(const NuConstants &k, const NuProblem &p);

// Requires c12 > 0. c13 > 0 is required when c3 > 0; for c3 < 0 the point
// s = 1/c3 is off the physical axis and the factor (1 - c3 s)^c13 is bounded.
WavefunctionParams wavefunction_params(const NuConstants &k);

} // namespace thspec
