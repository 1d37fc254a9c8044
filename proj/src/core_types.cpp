#include "thspec/core_types.hpp"
#include "thspec/error.hpp"
#include <cmath>
#include <fmt/format.h>
#include <numbers>

namespace thspec {

ThPotential ThPotential::make(double D, double b_h, double r_e, double c_h) {
  if (!(D > 0.0) || !(b_h > 0.0) || !(r_e > 0.0) || !std::isfinite(D) ||
      !std::isfinite(b_h) || !std::isfinite(r_e))
    fail(ErrorCode::InvalidArgument,
         fmt::format("TH potential needs D, b_h, r_e > 0 (got D={}, b_h={}, "
                     "r_e={})",
                     D, b_h, r_e));
  if (!(c_h < 1.0) || !std::isfinite(c_h))
    fail(ErrorCode::InvalidArgument,
         fmt::format("TH potential needs c_h < 1 (got {})", c_h));
  // 1 - c_h s vanishes at s = 1/c_h; on r > 0 the largest s is exp(alpha).
  // Equality puts the pole at r = 0, outside the domain.
  if (c_h > 0.0 && !(c_h <= std::exp(-b_h * r_e)))
    fail(ErrorCode::PoleInDomain,
         fmt::format("c_h = {} puts a pole on r > 0 (needs c_h <= exp(-alpha) "
                     "= {})",
                     c_h, std::exp(-b_h * r_e)));
  return ThPotential(D, b_h, r_e, c_h);
}

double ThPotential::s_of_r(double r) const noexcept {
  return std::exp(-b_h_ * (r - r_e_));
}

double ThPotential::value(double r) const {
  const double u = s_of_r(r);
  const double den = 1.0 - c_h_ * u;
  if (den == 0.0)
    fail(ErrorCode::PoleInDomain, fmt::format("pole of V at r = {}", r));
  const double q = -std::expm1(-b_h_ * (r - r_e_)) / den;
  return D_ * q * q;
}

double th_potential_value(const ThPotential &pot, double r) {
  if (!(r > 0.0))
    fail(ErrorCode::InvalidArgument, "potential evaluated at r <= 0");
  return pot.value(r);
}

double morse_value(double D, double b_h, double r_e, double r) {
  const double q = -std::expm1(-b_h * (r - r_e));
  return D * q * q;
}

const char *branch_name(Branch b) noexcept {
  return b == Branch::Spin ? "spin" : "pspin";
}

SymmetryConfig SymmetryConfig::make(Branch branch, double M, double C) {
  if (!(M > 0.0) || !std::isfinite(M) || !std::isfinite(C))
    fail(ErrorCode::InvalidArgument,
         fmt::format("symmetry config needs finite M > 0 (got {})", M));
  return SymmetryConfig{branch, M, C};
}

QuantumState QuantumState::make(int n, int kappa) {
  if (n < 0)
    fail(ErrorCode::InvalidArgument,
         fmt::format("radial quantum number must be >= 0 (got {})", n));
  if (kappa == 0)
    fail(ErrorCode::InvalidArgument, "kappa must be nonzero");
  return QuantumState(n, kappa);
}

double QuantumState::eta(Branch b) const noexcept {
  const double k = kappa_;
  return b == Branch::Spin ? k * (k + 1.0) : k * (k - 1.0);
}

int QuantumState::orbital(Branch b) const noexcept {
  if (b == Branch::Spin)
    return kappa_ < 0 ? -kappa_ - 1 : kappa_;
  return kappa_ < 0 ? -kappa_ : kappa_ - 1;
}

char orbital_letter(int l) {
  static constexpr const char letters[] = "spdfghiklmnoqrtuvwxyz";
  if (l < 0 || l >= static_cast<int>(sizeof(letters) - 1))
    return '?';
  return letters[l];
}

std::string QuantumState::label(Branch b) const {
  // Labels carry the physical orbital l; a pspin partner with kappa > 0 sits
  // one radial node lower.
  const int l = orbital(Branch::Spin);
  const int shown_n = (b == Branch::Pspin && kappa_ > 0) ? n_ - 1 : n_;
  return fmt::format("{}{}_{{{}/2}}", shown_n, orbital_letter(l), two_j());
}

double PhysicalConstants::wavenumber_to_eV() const noexcept {
  const double hbar_c_eV_cm = hbar_c_eV_A * 1e-8;
  return wavenumber == WavenumberConvention::TwoPi
             ? 2.0 * std::numbers::pi * hbar_c_eV_cm
             : hbar_c_eV_cm;
}

ThPotential NaturalMolecule::potential() const {
  return ThPotential::make(D, b_h, r_e, c_h);
}

NaturalMolecule to_natural_units(const MoleculeRecord &rec,
                                 const PhysicalConstants &consts) {
  NaturalMolecule nat;
  nat.D = rec.D_wavenumber * consts.wavenumber_to_eV() / consts.hbar_c_eV_A;
  nat.b_h = rec.b_h_inv_A;
  nat.r_e = rec.r_e_A;
  nat.c_h = rec.c_h;
  nat.M = rec.mu_amu * consts.amu_eV / consts.hbar_c_eV_A;
  return nat;
}

MoleculeRecord from_natural_units(const std::string &name,
                                  const NaturalMolecule &nat,
                                  const PhysicalConstants &consts) {
  MoleculeRecord rec;
  rec.name = name;
  rec.c_h = nat.c_h;
  rec.mu_amu = nat.M * consts.hbar_c_eV_A / consts.amu_eV;
  rec.b_h_inv_A = nat.b_h;
  rec.r_e_A = nat.r_e;
  rec.D_wavenumber = nat.D * consts.hbar_c_eV_A / consts.wavenumber_to_eV();
  return rec;
}

} // namespace thspec
