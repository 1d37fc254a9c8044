#pragma once

#include "thspec/spectra.hpp"
#include <span>
#include <vector>

namespace thspec {

enum class CentrifugalMode { Exact, Pekeris };
const char *centrifugal_mode_name(CentrifugalMode m) noexcept;

// Dirichlet grid r_i = r_min + i h, i = 1..N, h = (r_max - r_min)/(N + 1).
struct FdGrid {
  double r_min = 1e-3;
  double r_max = 0.0;
  std::size_t N = 6000;

  static FdGrid make(double r_min, double r_max, std::size_t N);
  double h() const noexcept { return (r_max - r_min) / (N + 1.0); }
  FdGrid halved() const; // 2N + 1 interior points, h / 2
};

FdGrid default_grid(const ThPotential &pot, std::size_t N = 6000);

// n-th smallest eigenvalue (n = 0 lowest) of -d^2/dr^2 + U(r_i) with the
// three-point Laplacian; U is sampled on the interior points.
double fd_mode_eigenvalue(std::span<const double> U, double h, int n);

struct OracleOptions {
  FdGrid grid;                // r_max = 0 selects the default grid
  int scan_points = 96;
  double tolerance = 1e-13;   // relative, on the offset
  bool richardson = true;
};

struct OracleResult {
  double E = 0.0;                   // reported energy (extrapolated)
  double offset = 0.0;              // E - reference
  double raw_E = 0.0;               // finest single-grid value
  double self_consistency_residual = 0.0;
  double richardson_change = 0.0;   // |E(h) - E(h/2)| of extrapolated values
  CentrifugalMode mode = CentrifugalMode::Pekeris;
  FdGrid grid;
  std::vector<double> all_roots;    // every self-consistent E on the base grid
};

// Samples of eta * W(r) and V(r) on a grid, reused across trial energies.
class FdOperator {
public:
  FdOperator(const Model &m, const QuantumState &st, CentrifugalMode mode,
             const FdGrid &grid);
  // mu_n for the given gamma.
  double mode_eigenvalue(double gamma, int n) const;
  const FdGrid &grid() const noexcept { return grid_; }

private:
  FdGrid grid_;
  std::vector<double> centrifugal_;
  std::vector<double> potential_;
};

// Root of g(E) = mu_n(E) + beta^2(E) over the bound-state band. Throws NoRoot.
OracleResult solve_self_consistent(const Model &m, const QuantumState &st,
                                   CentrifugalMode mode,
                                   const OracleOptions &opt = {});

// Schrodinger check: E = mu_n / (2 mu) directly.
double solve_nonrel_fd(double mu, const ThPotential &pot, int n, int l,
                       CentrifugalMode mode, const FdGrid &grid);

} // namespace thspec
