#include "thspec/wavefunctions.hpp"
#include "thspec/error.hpp"
#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <fmt/format.h>
#include <limits>

namespace thspec {

namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// log of s^c12 (1 - c s)^c13 without the polynomial.
double log_envelope(const SpinorSolution &sol, double r) {
  const auto &pot = sol.model.pot;
  const double c = pot.c_h();
  const double log_s = -pot.b_h() * (r - pot.r_e());
  const double s = std::exp(log_s);
  return sol.params.exponent_s * log_s +
         sol.params.exponent_1mc3s * std::log1p(-c * s);
}

double from_log(double log_abs, int sign) {
  return sign == 0 ? 0.0 : sign * std::exp(log_abs);
}

// sign(kappa) convention of the first-order relation: +kappa/r for spin,
// -kappa/r for pspin.
double kappa_term(const SpinorSolution &sol) {
  const double k = sol.level.state.kappa();
  return sol.model.sym.branch == Branch::Spin ? k : -k;
}

} // namespace

SpinorSolution make_spinor(const Model &m, const EnergyLevel &level) {
  if (m.form != PotentialForm::TietzHua)
    fail(ErrorCode::InvalidArgument,
         "spinors are built for the Tietz-Hua form (c_h != 0)");
  if (m.pot.c_h() == 0.0)
    fail(ErrorCode::C3Zero, "spinors need c_h != 0");
  SpinorSolution sol{m, level, {}, {}, 0.0, 0.0, false, {}};
  const auto in = effective_inputs(m, level.state, level.offset);
  const auto p = nu_problem_from(in);
  sol.constants = derive_constants(p, convention_signs(m));
  sol.params = wavefunction_params(sol.constants);
  // Spin: M + E - C_s = gamma. Pspin: M - E + C_ps = -gamma~.
  const double gamma = kinematics_offset(m.sym, level.offset).gamma;
  sol.partner_denominator = m.sym.branch == Branch::Spin ? gamma : -gamma;
  if (std::abs(sol.partner_denominator) <
      1e-300 + 1e-14 * (std::abs(m.sym.M) + std::abs(level.E)))
    fail(ErrorCode::DegenerateDenominator,
         fmt::format("partner denominator vanishes at E = {}", level.E));
  return sol;
}

LogMagnitude primary_log(const SpinorSolution &sol, double r) {
  const double c = sol.model.pot.c_h();
  const double s = sol.model.pot.s_of_r(r);
  auto p = jacobi_log(sol.level.state.n(), sol.params.jacobi_a,
                      sol.params.jacobi_b, 1.0 - 2.0 * c * s);
  if (p.sign == 0)
    return p;
  p.log_abs += log_envelope(sol, r) + sol.log_norm;
  return p;
}

double primary_component(const SpinorSolution &sol, double r) {
  const auto v = primary_log(sol, r);
  return from_log(v.log_abs, v.sign);
}

double primary_derivative(const SpinorSolution &sol, double r) {
  const auto &pot = sol.model.pot;
  const double c = pot.c_h();
  const double s = pot.s_of_r(r);
  const int n = sol.level.state.n();
  const double a = sol.params.jacobi_a, b = sol.params.jacobi_b;
  const double x = 1.0 - 2.0 * c * s;
  const double log_env = log_envelope(sol, r) + sol.log_norm;
  // d/ds [s^c12 (1-cs)^c13 P(1-2cs)], then ds/dr = -b_h s.
  const auto p = jacobi_log(n, a, b, x);
  const double w = sol.params.exponent_s -
                   c * sol.params.exponent_1mc3s * s / (1.0 - c * s);
  double sum = from_log(p.log_abs + log_env, p.sign) * w;
  if (n > 0) {
    const auto dp = jacobi_derivative_log(n, a, b, x);
    sum += from_log(dp.log_abs + log_env, dp.sign) * (-2.0 * c * s);
  }
  return -pot.b_h() * sum;
}

double partner_component(const SpinorSolution &sol, double r) {
  if (!(r > 0.0))
    fail(ErrorCode::InvalidArgument, "partner component needs r > 0");
  return (primary_derivative(sol, r) +
          kappa_term(sol) / r * primary_component(sol, r)) /
         sol.partner_denominator;
}

//==============================================================================
namespace {

struct DensityPieces {
  double integral = 0.0;
  double singular_weight = 0.0; // coefficient of 1/r^2 in the density at 0
};

DensityPieces integrate_density(const SpinorSolution &sol,
                                const NormalizeOptions &opt) {
  using boost::math::quadrature::gauss_kronrod;
  const auto &pot = sol.model.pot;
  const double re = pot.r_e();
  const double R = re + opt.domain_widths / pot.b_h();
  const double r_cut = opt.r_cut_fraction * re;
  auto density = [&](double r) {
    const double f = primary_component(sol, r);
    const double g = partner_component(sol, r);
    return f * f + g * g;
  };
  // Peak width ~ 1/(b_h sqrt(c8)); split around r_e so the adaptive rule sees
  // the peak in every pass.
  const double width =
      1.0 / (pot.b_h() * std::max(sol.params.exponent_s, 1e-3));
  std::vector<double> cuts{r_cut};
  for (double k : {-8.0, -2.0, 0.0, 2.0, 8.0, 32.0}) {
    const double x = re + k * width;
    if (x > cuts.back() && x < R)
      cuts.push_back(x);
  }
  cuts.push_back(R);
  DensityPieces out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double err = 0.0;
    out.integral += gauss_kronrod<double, 31>::integrate(
        density, cuts[i], cuts[i + 1], 15, 1e-12, &err);
  }
  // Tail beyond R decays like exp(-2 c12 b_h r).
  out.integral += density(R) / (2.0 * sol.params.exponent_s * pot.b_h());
  // Near r = 0 the primary is ~ f0 and the partner ~ kappa f0 / (den r).
  const double f0 = primary_component(sol, r_cut);
  out.integral += f0 * f0 * r_cut;
  const double k = kappa_term(sol) / sol.partner_denominator;
  out.singular_weight = k * k * f0 * f0;
  return out;
}

} // namespace

double density_integral(const SpinorSolution &sol,
                        const NormalizeOptions &opt) {
  return integrate_density(sol, opt).integral;
}

SpinorSolution normalize(const SpinorSolution &sol,
                         const NormalizeOptions &opt) {
  SpinorSolution out = sol;
  // Rescale so the peak of the primary is O(1) before integrating.
  const auto &pot = sol.model.pot;
  double peak = neg_inf;
  for (double r : log_grid(1e-3 * pot.r_e(), pot.r_e() + 60.0 / pot.b_h(),
                           4000)) {
    const auto v = primary_log(sol, r);
    if (v.sign != 0)
      peak = std::max(peak, v.log_abs);
  }
  if (!std::isfinite(peak))
    fail(ErrorCode::NotIntegrable, "primary component vanishes identically");
  out.log_norm = sol.log_norm - peak;
  const auto pieces = integrate_density(out, opt);
  const double r_cut = opt.r_cut_fraction * pot.r_e();
  // The partner's kappa/r term turns a nonzero primary at r = 0 into a 1/r^2
  // density; flag it once it would be visible at the requested tolerance.
  if (pieces.singular_weight / r_cut > opt.absolute_tolerance * pieces.integral)
    fail(ErrorCode::NotIntegrable,
         fmt::format("primary component does not vanish at r -> 0 (s-domain "
                     "reaches exp(alpha) = {}); 1/r^2 density weight {}",
                     std::exp(pot.alpha()), pieces.singular_weight));
  if (!(pieces.integral > 0.0) || !std::isfinite(pieces.integral))
    fail(ErrorCode::NotIntegrable,
         fmt::format("density integral is {}", pieces.integral));
  out.log_norm -= 0.5 * std::log(pieces.integral);
  out.normalized = true;
  return out;
}

//==============================================================================
std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2)
    fail(ErrorCode::InvalidArgument, "log grid needs 0 < lo < hi, count >= 2");
  std::vector<double> r(count);
  const double ratio = std::log(hi / lo);
  for (std::size_t i = 0; i < count; ++i)
    r[i] = lo * std::exp(ratio * i / (count - 1.0));
  r.back() = hi;
  return r;
}

std::vector<double> node_positions(const SpinorSolution &sol) {
  const auto &pot = sol.model.pot;
  const double lo = 1e-6 * pot.r_e();
  const double hi = pot.r_e() + 80.0 / pot.b_h();
  // Linear grid around the well plus logarithmic coverage toward r = 0.
  auto grid = log_grid(lo, hi, 20000);
  for (int i = 0; i <= 20000; ++i)
    grid.push_back(lo + (hi - lo) * i / 20000.0);
  std::sort(grid.begin(), grid.end());
  std::vector<double> nodes;
  int prev_sign = 0;
  double prev_r = 0.0;
  for (double r : grid) {
    const int sg = primary_log(sol, r).sign;
    if (sg == 0)
      continue;
    if (prev_sign != 0 && sg != prev_sign) {
      double a = prev_r, b = r;
      for (int it = 0; it < 200 && b - a > 1e-14 * b; ++it) {
        const double mid = 0.5 * (a + b);
        const int sm = primary_log(sol, mid).sign;
        if (sm == prev_sign)
          a = mid;
        else
          b = mid;
      }
      nodes.push_back(0.5 * (a + b));
    }
    prev_sign = sg;
    prev_r = r;
  }
  return nodes;
}

int node_count(const SpinorSolution &sol) {
  return static_cast<int>(node_positions(sol).size());
}

void sample_spinor(const SpinorSolution &sol, std::span<const double> r,
                   std::span<SpinorSample> out) {
  if (r.size() != out.size())
    fail(ErrorCode::InvalidArgument, "sample buffers differ in length");
  const bool spin = sol.model.sym.branch == Branch::Spin;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double p = primary_component(sol, r[i]);
    const double q = partner_component(sol, r[i]);
    out[i] = {r[i], spin ? p : q, spin ? q : p};
  }
}

} // namespace thspec
