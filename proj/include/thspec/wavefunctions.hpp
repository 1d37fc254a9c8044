#pragma once

#include "thspec/jacobi.hpp"
#include "thspec/nu_engine.hpp"
#include "thspec/spectra.hpp"
#include <span>
#include <string>
#include <vector>

namespace thspec {

// Two-component radial spinor for a converged level. The primary component
// (F for spin, G for pspin) is
//   N s^c12 (1 - c_h s)^c13 P_n^(c10,c11)(1 - 2 c_h s),  s = exp(-b_h (r - r_e)),
// and the partner follows from the first-order relation of the branch.
struct SpinorSolution {
  Model model;
  EnergyLevel level;
  NuConstants constants;
  WavefunctionParams params;
  double partner_denominator = 0.0; // M + E - C_s, or M - E + C_ps
  double log_norm = 0.0;            // log N
  bool normalized = false;
  std::string diagnostic;
};

SpinorSolution make_spinor(const Model &m, const EnergyLevel &level);

LogMagnitude primary_log(const SpinorSolution &sol, double r);
double primary_component(const SpinorSolution &sol, double r);
double primary_derivative(const SpinorSolution &sol, double r);
double partner_component(const SpinorSolution &sol, double r);

struct NormalizeOptions {
  double absolute_tolerance = 1e-10; // on the density integral
  double r_cut_fraction = 1e-6;      // (0, r_cut) is handled analytically
  double domain_widths = 40.0;       // integrate to r_e + widths / b_h
};

// Integral of F^2 + G^2 over (0, inf) for the current scaling.
double density_integral(const SpinorSolution &sol,
                        const NormalizeOptions &opt = {});
SpinorSolution normalize(const SpinorSolution &sol,
                         const NormalizeOptions &opt = {});

// Strict sign changes of the primary component on (0, inf).
int node_count(const SpinorSolution &sol);
std::vector<double> node_positions(const SpinorSolution &sol);

struct SpinorSample {
  double r = 0.0;
  double upper = 0.0; // F
  double lower = 0.0; // G
};

void sample_spinor(const SpinorSolution &sol, std::span<const double> r,
                   std::span<SpinorSample> out);
std::vector<double> log_grid(double lo, double hi, std::size_t count);

} // namespace thspec
