#pragma once

#include <string>

namespace thspec {

//==============================================================================
// Tietz-Hua potential V(r) = D [(1 - u)/(1 - c_h u)]^2, u = exp(-b_h (r - r_e)).
// Immutable; the factory rejects parameter sets with a pole on r > 0.
class ThPotential {
public:
  static ThPotential make(double D, double b_h, double r_e, double c_h);

  double D() const noexcept { return D_; }
  double b_h() const noexcept { return b_h_; }
  double r_e() const noexcept { return r_e_; }
  double c_h() const noexcept { return c_h_; }
  double alpha() const noexcept { return b_h_ * r_e_; }
  double morse_beta() const noexcept { return b_h_ / (1.0 - c_h_); }

  // exp(-b_h (r - r_e)); the NU variable s.
  double s_of_r(double r) const noexcept;
  double value(double r) const;

private:
  ThPotential(double D, double b_h, double r_e, double c_h)
      : D_(D), b_h_(b_h), r_e_(r_e), c_h_(c_h) {}
  double D_, b_h_, r_e_, c_h_;
};

double th_potential_value(const ThPotential &pot, double r);

// Morse version I: the c_h -> 0 form, D (1 - u)^2.
double morse_value(double D, double b_h, double r_e, double r);

//==============================================================================
enum class Branch { Spin, Pspin };

const char *branch_name(Branch b) noexcept;

struct SymmetryConfig {
  Branch branch = Branch::Spin;
  double M = 1.0; // fermion mass
  double C = 0.0; // C_s for Spin, C_ps for Pspin

  static SymmetryConfig make(Branch branch, double M, double C);
};

//==============================================================================
class QuantumState {
public:
  static QuantumState make(int n, int kappa);

  int n() const noexcept { return n_; }
  int kappa() const noexcept { return kappa_; }

  // kappa (kappa + 1) for Spin, kappa (kappa - 1) for Pspin.
  double eta(Branch b) const noexcept;
  // Orbital l (Spin) or pseudo-orbital l~ (Pspin).
  int orbital(Branch b) const noexcept;
  // Twice the total angular momentum, 2j = 2|kappa| - 1.
  int two_j() const noexcept { return 2 * (kappa_ < 0 ? -kappa_ : kappa_) - 1; }
  // Spectroscopic label such as "0p_{3/2}".
  std::string label(Branch b) const;

private:
  QuantumState(int n, int kappa) : n_(n), kappa_(kappa) {}
  int n_, kappa_;
};

char orbital_letter(int l);

//==============================================================================
enum class WavenumberConvention { TwoPi, Plain };

struct PhysicalConstants {
  double hbar_c_eV_A = 1973.29;     // eV * Angstrom
  double amu_eV = 931.494028e6;     // eV / c^2
  WavenumberConvention wavenumber = WavenumberConvention::TwoPi;

  // eV per cm^-1: 2 pi hbar c (or hbar c for Plain) with hbar c in eV cm.
  double wavenumber_to_eV() const noexcept;
};

struct MoleculeRecord {
  std::string name;
  double c_h = 0.0;
  double mu_amu = 0.0;
  double b_h_inv_A = 0.0;
  double r_e_A = 0.0;
  double D_wavenumber = 0.0;
};

// Molecule parameters in inverse Angstrom: energies divided by hbar c.
struct NaturalMolecule {
  double D = 0.0;
  double b_h = 0.0;
  double r_e = 0.0;
  double c_h = 0.0;
  double M = 0.0;

  ThPotential potential() const;
};

NaturalMolecule to_natural_units(const MoleculeRecord &rec,
                                 const PhysicalConstants &consts);
MoleculeRecord from_natural_units(const std::string &name,
                                  const NaturalMolecule &nat,
                                  const PhysicalConstants &consts);

} // namespace thspec
