#pragma once

#include "thspec/core_types.hpp"
#include "thspec/nu_engine.hpp"
#include "thspec/pekeris.hpp"
#include <string>
#include <vector>

namespace thspec {

//==============================================================================
// TietzHua uses c_h as given. MorseI is the c_h -> 0 limit, D (1 - u)^2.
// MorseII drops the additive constant, D (1 - u)^2 - D.
enum class PotentialForm { TietzHua, MorseI, MorseII };

// Which roots of the quantization condition are reported.
//   Standard:  the decaying-solution branch, +sqrt(c8) and +sqrt(c9).
//   Tabulated: the branch that reproduces the published spin/pspin tables,
//              -sqrt(c8) for spin, -sqrt(c9) for pspin, and for the spin TH
//              case the constant c_h (n(n+1) - 1/2) instead of c_h (n(n+1) + 1/2).
enum class Convention { Standard, Tabulated };

const char *form_name(PotentialForm f) noexcept;
const char *convention_name(Convention c) noexcept;

struct Model {
  ThPotential pot;
  SymmetryConfig sym;
  PotentialForm form = PotentialForm::TietzHua;
  Convention convention = Convention::Standard;

  double c_eff() const noexcept;    // c_h, or 0 for the Morse forms
  double D_shift() const noexcept;  // constant D carried in the s^0 term
};

// gamma = M + E - C_s, beta^2 = (M - E)(M + E - C_s) for Spin;
// gamma~ = E - M - C_ps, beta~^2 = (M + E)(M - E + C_ps) for Pspin.
struct BranchKinematics {
  double gamma = 0.0;
  double beta_sq = 0.0;
};

// Energies are handled as E = reference + offset with reference = +M (Spin)
// or -M (Pspin), so large masses do not cancel against small bindings.
double reference_energy(const SymmetryConfig &sym) noexcept;
BranchKinematics kinematics_offset(const SymmetryConfig &sym, double offset);
BranchKinematics kinematics(const SymmetryConfig &sym, double E);

//==============================================================================
// Inputs of -F'' + [eta W_pekeris + gamma V] F = -beta^2 F written out,
// independent of how (gamma, beta^2) came from the energy.
struct EffectiveInputs {
  double eta = 0.0;
  double gamma = 0.0;
  double beta_sq = 0.0;
  double D = 0.0;       // may be negative, see the spin/pspin mapping test
  double D_shift = 0.0; // D for TH/MorseI, 0 for MorseII
  double alpha = 0.0;
  double r_e = 0.0;
  double c_h = 0.0;
  PekerisCoefficients coeffs;
};

NuProblem nu_problem_from(const EffectiveInputs &in);

// Quantization residual; c_h = 0 uses the Morse closed form.
ResidualValue residual_from(const EffectiveInputs &in, int n, RadicalSigns signs,
                            double constant_shift);

NuProblem build_nu_input(const Model &m, const QuantumState &st, double E);
EffectiveInputs effective_inputs(const Model &m, const QuantumState &st,
                                 double offset);
RadicalSigns convention_signs(const Model &m) noexcept;
double convention_constant_shift(const Model &m) noexcept;

ResidualValue residual_offset(const Model &m, const QuantumState &st,
                              double offset);
double residual(const Model &m, const QuantumState &st, double E);

double spin_energy_residual(const Model &m, const QuantumState &st, double E);
double pspin_energy_residual(const Model &m, const QuantumState &st, double E);
double morse_spin_residual(const Model &m, const QuantumState &st, double E);
double morse_pspin_residual(const Model &m, const QuantumState &st, double E);

//==============================================================================
enum class LevelKind { Spin, Pspin, MorseI, MorseII, NonRel };
const char *level_kind_name(LevelKind k) noexcept;
LevelKind level_kind(const Model &m) noexcept;

struct EnergyLevel {
  QuantumState state;
  LevelKind kind = LevelKind::Spin;
  Convention convention = Convention::Standard;
  double E = 0.0;
  double reference = 0.0;
  double offset = 0.0; // E - reference, carried at full precision
  double residual = 0.0;
  double residual_scale = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
};

// Offsets where c8 >= 0 and c9 >= 0 hold.
struct EnergyWindow {
  double lo = 0.0;
  double hi = 0.0;
  bool empty() const noexcept { return !(lo < hi); }
};

EnergyWindow physical_window(const Model &m, const QuantumState &st);

struct SolveOptions {
  int scan_points = 4096;
  double relative_tolerance = 1e-12;
  double merge_fraction = 1e-9;
};

// All roots in the window, sorted by energy. Empty when nothing brackets.
std::vector<EnergyLevel> solve_levels(const Model &m, const QuantumState &st,
                                      const SolveOptions &opt = {});

// The level a table row reports. Standard: the root closest to the reference
// energy +-M, which skips formal roots near gamma = 0 (E ~ -M for spin).
// Tabulated: the root closest to E = 0, where the published roots sit.
const EnergyLevel *primary_level(const std::vector<EnergyLevel> &levels);

//==============================================================================
// Generalized Morse D (1 - b/(exp(a r) - 1))^2 with b = exp(a r_e) - 1 is TH
// with b_h = a and c_h = exp(-a r_e).
ThPotential gmp_from(double alpha_gmp, double r_e, double D);
double gmp_value(double alpha_gmp, double r_e, double D, double r);

//==============================================================================
// Nonrelativistic limit, hbar = 1: eps = 2 mu E, d = 2 mu D.
struct NonRelParams {
  double mu = 0.0;
  double eps = 0.0;
  double d = 0.0;
  double xi1 = 0.0;
  double xi2 = 0.0;
  double xi3 = 0.0;
};

NonRelParams nonrel_params(double mu, const ThPotential &pot, int l, double E);
double nonrel_residual(double mu, const ThPotential &pot, int n, int l,
                       double E);
std::vector<EnergyLevel> solve_nonrel(double mu, const ThPotential &pot, int n,
                                      int l, const SolveOptions &opt = {});

} // namespace thspec
