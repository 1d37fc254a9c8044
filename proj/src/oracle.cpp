#include "thspec/oracle.hpp"
#include "thspec/error.hpp"
#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <fmt/format.h>
#include <limits>

extern "C" {
// LAPACK bisection/Sturm-count eigenvalues of a symmetric tridiagonal matrix.
void dstebz_(const char *range, const char *order, const int *n,
             const double *vl, const double *vu, const int *il, const int *iu,
             const double *abstol, const double *d, const double *e, int *m,
             int *nsplit, double *w, int *iblock, int *isplit, double *work,
             int *iwork, int *info, std::size_t range_len,
             std::size_t order_len);
}

namespace thspec {

const char *centrifugal_mode_name(CentrifugalMode m) noexcept {
  return m == CentrifugalMode::Exact ? "exact" : "pekeris";
}

FdGrid FdGrid::make(double r_min, double r_max, std::size_t N) {
  if (!(r_min > 0.0) || !(r_max > r_min) || N < 3)
    fail(ErrorCode::InvalidArgument,
         fmt::format("bad FD grid [{}, {}] with N = {}", r_min, r_max, N));
  return FdGrid{r_min, r_max, N};
}

FdGrid FdGrid::halved() const { return FdGrid{r_min, r_max, 2 * N + 1}; }

FdGrid default_grid(const ThPotential &pot, std::size_t N) {
  return FdGrid::make(1e-3, pot.r_e() + 60.0 / pot.b_h(), N);
}

double fd_mode_eigenvalue(std::span<const double> U, double h, int n) {
  const int N = static_cast<int>(U.size());
  if (n < 0 || n >= N || !(h > 0.0))
    fail(ErrorCode::InvalidArgument, "FD eigenvalue index out of range");
  const double inv_h2 = 1.0 / (h * h);
  std::vector<double> d(U.size()), e(U.size() - 1, -inv_h2);
  for (int i = 0; i < N; ++i)
    d[i] = 2.0 * inv_h2 + U[i];
  const int il = n + 1, iu = n + 1;
  const double vl = 0.0, vu = 0.0, abstol = 0.0;
  int m = 0, nsplit = 0, info = 0;
  std::vector<double> w(U.size()), work(4 * U.size());
  std::vector<int> iblock(U.size()), isplit(U.size()), iwork(3 * U.size());
  dstebz_("I", "E", &N, &vl, &vu, &il, &iu, &abstol, d.data(), e.data(), &m,
          &nsplit, w.data(), iblock.data(), isplit.data(), work.data(),
          iwork.data(), &info, 1, 1);
  if (info != 0 || m < 1)
    fail(ErrorCode::NoRoot,
         fmt::format("tridiagonal eigenvalue solver failed (info = {})", info));
  return w[0];
}

FdOperator::FdOperator(const Model &m, const QuantumState &st,
                       CentrifugalMode mode, const FdGrid &grid)
    : grid_(grid), centrifugal_(grid.N), potential_(grid.N) {
  const double eta = st.eta(m.sym.branch);
  const double c = m.c_eff();
  const auto coeffs = pekeris_coefficients(m.pot.alpha(), c);
  const auto shape = ThPotential::make(m.pot.D(), m.pot.b_h(), m.pot.r_e(), c);
  const double shift = m.pot.D() - m.D_shift();
  const double h = grid.h();
  for (std::size_t i = 0; i < grid.N; ++i) {
    const double r = grid.r_min + (i + 1.0) * h;
    centrifugal_[i] = mode == CentrifugalMode::Exact
                          ? centrifugal_exact(eta, r)
                          : centrifugal_pekeris(eta, shape, coeffs, r);
    potential_[i] = shape.value(r) - shift;
  }
}

double FdOperator::mode_eigenvalue(double gamma, int n) const {
  std::vector<double> U(grid_.N);
  for (std::size_t i = 0; i < grid_.N; ++i)
    U[i] = centrifugal_[i] + gamma * potential_[i];
  return fd_mode_eigenvalue(U, grid_.h(), n);
}

namespace {

struct GridRoots {
  std::vector<double> roots; // offsets
  double residual = 0.0;     // |g| at the selected root
};

GridRoots self_consistent_roots(const Model &m, const QuantumState &st,
                                CentrifugalMode mode, const FdGrid &grid,
                                double lo, double hi, const OracleOptions &opt,
                                const double *near) {
  const FdOperator op(m, st, mode, grid);
  const int n = st.n();
  auto g = [&](double x) {
    const auto kin = kinematics_offset(m.sym, x);
    return op.mode_eigenvalue(kin.gamma, n) + kin.beta_sq;
  };
  auto tol = [&](double a, double b) {
    return std::abs(b - a) <=
           std::max(opt.tolerance * std::max(std::abs(a), std::abs(b)),
                    1e-15 * (hi - lo));
  };
  GridRoots out;
  // Refine near a previous root instead of rescanning the band.
  if (near) {
    double step = 1e-4 * (hi - lo);
    for (int k = 0; k < 40; ++k, step *= 2.0) {
      const double a = std::max(lo, *near - step), b = std::min(hi, *near + step);
      const double ga = g(a), gb = g(b);
      if (ga * gb <= 0.0) {
        std::uintmax_t it = 200;
        const auto [x0, x1] = boost::math::tools::bisect(g, a, b, tol, it);
        const double x = 0.5 * (x0 + x1);
        out.roots.push_back(x);
        out.residual = std::abs(g(x));
        return out;
      }
      if (a == lo && b == hi)
        break;
    }
    fail(ErrorCode::NoRoot, "self-consistent root lost on the refined grid");
  }
  const int pts = std::max(opt.scan_points, 8);
  std::vector<double> xs(pts), gs(pts);
  for (int i = 0; i < pts; ++i) {
    xs[i] = lo + (hi - lo) * i / (pts - 1.0);
    gs[i] = g(xs[i]);
  }
  for (int i = 0; i + 1 < pts; ++i) {
    if (gs[i] == 0.0) {
      out.roots.push_back(xs[i]);
      continue;
    }
    if (gs[i] * gs[i + 1] >= 0.0)
      continue;
    std::uintmax_t it = 200;
    const auto [x0, x1] = boost::math::tools::bisect(g, xs[i], xs[i + 1], tol, it);
    out.roots.push_back(0.5 * (x0 + x1));
  }
  if (!out.roots.empty())
    out.residual = std::abs(g(out.roots.front()));
  return out;
}

} // namespace

OracleResult solve_self_consistent(const Model &m, const QuantumState &st,
                                   CentrifugalMode mode,
                                   const OracleOptions &opt) {
  const FdGrid base =
      opt.grid.r_max > 0.0 ? opt.grid : default_grid(m.pot, opt.grid.N);
  // Bound-state band: the n-th mode lies below the continuum threshold,
  // mu < gamma D_shift (+ eta D0 / r_e^2 in Pekeris mode). With
  // mu = -beta^2 = offset * gamma this is (x - z)(D_shift - x) >= -t.
  const double z = m.sym.branch == Branch::Spin ? m.sym.C - 2.0 * m.sym.M
                                                : 2.0 * m.sym.M + m.sym.C;
  const double t =
      mode == CentrifugalMode::Pekeris
          ? st.eta(m.sym.branch) *
                pekeris_coefficients(m.pot.alpha(), m.c_eff()).D0 /
                (m.pot.r_e() * m.pot.r_e())
          : 0.0;
  const double mid = 0.5 * (z + m.D_shift());
  const double half = 0.5 * (m.D_shift() - z);
  const double rad = half * half + t;
  if (rad <= 0.0)
    fail(ErrorCode::NoRoot, "empty bound-state band");
  const double R = std::sqrt(rad);
  const double lo = mid - R * (1.0 - 1e-12), hi = mid + R * (1.0 - 1e-12);

  auto coarse = self_consistent_roots(m, st, mode, base, lo, hi, opt, nullptr);
  if (coarse.roots.empty())
    fail(ErrorCode::NoRoot,
         fmt::format("no self-consistent FD root for n = {}, kappa = {}",
                     st.n(), st.kappa()));
  OracleResult res;
  res.mode = mode;
  res.grid = base;
  const double ref = reference_energy(m.sym);
  for (double x : coarse.roots)
    res.all_roots.push_back(ref + x);
  double x_h = coarse.roots.front();
  res.self_consistency_residual = coarse.residual;
  if (!opt.richardson) {
    res.offset = x_h;
    res.E = ref + x_h;
    res.raw_E = res.E;
    return res;
  }
  const FdGrid g2 = base.halved(), g4 = g2.halved();
  const double x_h2 =
      self_consistent_roots(m, st, mode, g2, lo, hi, opt, &x_h).roots.front();
  const auto fine = self_consistent_roots(m, st, mode, g4, lo, hi, opt, &x_h2);
  const double x_h4 = fine.roots.front();
  // Second-order scheme: x(h) = x* + a h^2 + O(h^4).
  const double rich_1 = x_h2 + (x_h2 - x_h) / 3.0;
  const double rich_2 = x_h4 + (x_h4 - x_h2) / 3.0;
  res.offset = rich_2;
  res.E = ref + rich_2;
  res.raw_E = ref + x_h4;
  res.richardson_change = std::abs(rich_2 - rich_1);
  res.self_consistency_residual = fine.residual;
  return res;
}

double solve_nonrel_fd(double mu, const ThPotential &pot, int n, int l,
                       CentrifugalMode mode, const FdGrid &grid) {
  if (!(mu > 0.0) || l < 0)
    fail(ErrorCode::InvalidArgument, "nonrel FD needs mu > 0, l >= 0");
  const double eta = l * (l + 1.0);
  const auto coeffs = pekeris_coefficients(pot);
  std::vector<double> U(grid.N);
  const double h = grid.h();
  for (std::size_t i = 0; i < grid.N; ++i) {
    const double r = grid.r_min + (i + 1.0) * h;
    const double w = mode == CentrifugalMode::Exact
                         ? centrifugal_exact(eta, r)
                         : centrifugal_pekeris(eta, pot, coeffs, r);
    U[i] = w + 2.0 * mu * pot.value(r);
  }
  return fd_mode_eigenvalue(U, h, n) / (2.0 * mu);
}

} // namespace thspec
