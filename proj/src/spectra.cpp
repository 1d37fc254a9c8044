#include "thspec/spectra.hpp"
#include "thspec/error.hpp"
#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <fmt/format.h>
#include <functional>
#include <limits>
#include <optional>

namespace thspec {

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

double clamp_radicand(double v, double scale, const char *name) {
  if (v >= 0.0)
    return v;
  if (v > -1e-13 * (1.0 + scale))
    return 0.0;
  fail(ErrorCode::NegativeRadicand,
       fmt::format("{} = {} < 0: no real bound-state solution", name, v));
}

// Residual with c3 = 0, where the general constants divide by zero:
// (2n+1) sqrt(c9) - xi2 + 2 sqrt(c8 c9) with c9 = xi1, c8 = xi3.
ResidualValue morse_closed_form(const NuProblem &p, int n, RadicalSigns signs) {
  const double c9 = clamp_radicand(p.xi1, std::abs(p.xi1), "c9");
  const double c8 = clamp_radicand(p.xi3, std::abs(p.xi3), "c8");
  const double r9 = signs.s9 * std::sqrt(c9);
  const double r8 = signs.s8 * std::sqrt(c8);
  const double terms[] = {(2.0 * n + 1.0) * r9, -p.xi2, 2.0 * r8 * r9};
  ResidualValue r;
  for (double t : terms) {
    r.value += t;
    r.scale += std::abs(t);
  }
  return r;
}

using OffsetResidual = std::function<std::optional<ResidualValue>(double)>;

} // namespace

const char *form_name(PotentialForm f) noexcept {
  switch (f) {
  case PotentialForm::TietzHua:
    return "tietz-hua";
  case PotentialForm::MorseI:
    return "morse-1";
  case PotentialForm::MorseII:
    return "morse-2";
  }
  return "?";
}

const char *convention_name(Convention c) noexcept {
  return c == Convention::Standard ? "standard" : "tabulated";
}

const char *level_kind_name(LevelKind k) noexcept {
  switch (k) {
  case LevelKind::Spin:
    return "spin";
  case LevelKind::Pspin:
    return "pspin";
  case LevelKind::MorseI:
    return "morse-1";
  case LevelKind::MorseII:
    return "morse-2";
  case LevelKind::NonRel:
    return "nonrel";
  }
  return "?";
}

double Model::c_eff() const noexcept {
  return form == PotentialForm::TietzHua ? pot.c_h() : 0.0;
}

double Model::D_shift() const noexcept {
  return form == PotentialForm::MorseII ? 0.0 : pot.D();
}

LevelKind level_kind(const Model &m) noexcept {
  switch (m.form) {
  case PotentialForm::MorseI:
    return LevelKind::MorseI;
  case PotentialForm::MorseII:
    return LevelKind::MorseII;
  default:
    return m.sym.branch == Branch::Spin ? LevelKind::Spin : LevelKind::Pspin;
  }
}

double reference_energy(const SymmetryConfig &sym) noexcept {
  return sym.branch == Branch::Spin ? sym.M : -sym.M;
}

BranchKinematics kinematics_offset(const SymmetryConfig &sym, double offset) {
  BranchKinematics k;
  if (sym.branch == Branch::Spin)
    k.gamma = 2.0 * sym.M - sym.C + offset;
  else
    k.gamma = offset - 2.0 * sym.M - sym.C;
  k.beta_sq = -offset * k.gamma;
  return k;
}

BranchKinematics kinematics(const SymmetryConfig &sym, double E) {
  return kinematics_offset(sym, E - reference_energy(sym));
}

//==============================================================================
NuProblem nu_problem_from(const EffectiveInputs &in) {
  const double c = in.c_h;
  const double a2 = in.alpha * in.alpha;
  const double re2 = in.r_e * in.r_e;
  const double gD = in.gamma * in.D * re2;
  const double b2 = in.beta_sq * re2;
  // Constant removed from the potential, spread over (1 - c s)^2.
  const double gd = in.gamma * (in.D - in.D_shift) * re2;
  const auto &k = in.coeffs;
  NuProblem p;
  p.c1 = 1.0;
  p.c2 = c;
  p.c3 = c;
  p.xi1 = (in.eta * (k.D0 * c * c - k.D1 * c + k.D2) + gD + b2 * c * c -
           gd * c * c) /
          a2;
  p.xi2 = (-in.eta * (k.D1 - 2.0 * c * k.D0) + 2.0 * gD + 2.0 * b2 * c -
           2.0 * gd * c) /
          a2;
  p.xi3 = (in.eta * k.D0 + gD + b2 - gd) / a2;
  return p;
}

ResidualValue residual_from(const EffectiveInputs &in, int n, RadicalSigns signs,
                            double constant_shift) {
  if (n < 0)
    fail(ErrorCode::InvalidArgument, "radial quantum number must be >= 0");
  const NuProblem p = nu_problem_from(in);
  if (p.c3 == 0.0)
    return morse_closed_form(p, n, signs);
  auto r = energy_residual_terms(derive_constants(p, signs), n);
  r.value += p.c3 * constant_shift;
  r.scale += std::abs(p.c3 * constant_shift);
  return r;
}

EffectiveInputs effective_inputs(const Model &m, const QuantumState &st,
                                 double offset) {
  const auto kin = kinematics_offset(m.sym, offset);
  EffectiveInputs in;
  in.eta = st.eta(m.sym.branch);
  in.gamma = kin.gamma;
  in.beta_sq = kin.beta_sq;
  in.D = m.pot.D();
  in.D_shift = m.D_shift();
  in.alpha = m.pot.alpha();
  in.r_e = m.pot.r_e();
  in.c_h = m.c_eff();
  in.coeffs = pekeris_coefficients(in.alpha, in.c_h);
  return in;
}

NuProblem build_nu_input(const Model &m, const QuantumState &st, double E) {
  const auto w = physical_window(m, st);
  const double x = E - reference_energy(m.sym);
  if (w.empty() || x < w.lo || x > w.hi)
    fail(ErrorCode::OutsideWindow,
         fmt::format("E = {} is outside the physical window", E));
  return nu_problem_from(effective_inputs(m, st, x));
}

RadicalSigns convention_signs(const Model &m) noexcept {
  if (m.convention == Convention::Standard)
    return {1, 1};
  return m.sym.branch == Branch::Spin ? RadicalSigns{-1, 1}
                                      : RadicalSigns{1, -1};
}

double convention_constant_shift(const Model &m) noexcept {
  if (m.convention == Convention::Tabulated && m.sym.branch == Branch::Spin)
    return -1.0;
  return 0.0;
}

ResidualValue residual_offset(const Model &m, const QuantumState &st,
                              double offset) {
  return residual_from(effective_inputs(m, st, offset), st.n(),
                       convention_signs(m), convention_constant_shift(m));
}

double residual(const Model &m, const QuantumState &st, double E) {
  return residual_offset(m, st, E - reference_energy(m.sym)).value;
}

namespace {

void require(const Model &m, Branch b, bool morse) {
  const bool is_morse = m.form != PotentialForm::TietzHua;
  if (m.sym.branch != b || is_morse != morse)
    fail(ErrorCode::InvalidArgument,
         fmt::format("residual called with a {} {} model", branch_name(b),
                     form_name(m.form)));
}

} // namespace

double spin_energy_residual(const Model &m, const QuantumState &st, double E) {
  require(m, Branch::Spin, false);
  return residual(m, st, E);
}

double pspin_energy_residual(const Model &m, const QuantumState &st, double E) {
  require(m, Branch::Pspin, false);
  return residual(m, st, E);
}

double morse_spin_residual(const Model &m, const QuantumState &st, double E) {
  require(m, Branch::Spin, true);
  return residual(m, st, E);
}

double morse_pspin_residual(const Model &m, const QuantumState &st, double E) {
  require(m, Branch::Pspin, true);
  return residual(m, st, E);
}

//==============================================================================
EnergyWindow physical_window(const Model &m, const QuantumState &st) {
  const double eta = st.eta(m.sym.branch);
  const double c = m.c_eff();
  const double re2 = m.pot.r_e() * m.pot.r_e();
  const double a2 = m.pot.alpha() * m.pot.alpha();
  const auto k = pekeris_coefficients(m.pot.alpha(), c);
  // gamma = offset - z in both branches.
  const double z = m.sym.branch == Branch::Spin ? m.sym.C - 2.0 * m.sym.M
                                                : 2.0 * m.sym.M + m.sym.C;
  // alpha^2 c8 = eta D0 + r_e^2 (offset - z)(D_shift - offset).
  const double mid = 0.5 * (z + m.D_shift());
  const double half = 0.5 * (m.D_shift() - z);
  const double rad = half * half + eta * k.D0 / re2;
  if (rad < 0.0)
    return {0.0, 0.0};
  const double R = std::sqrt(rad);
  EnergyWindow w{mid - R, mid + R};
  // alpha^2 (c9 - c^2/4) = eta D2 + gamma D r_e^2 (1 - c)^2.
  const double slope = m.pot.D() * re2 * (1.0 - c) * (1.0 - c);
  const double gamma_min = -(c * c * a2 / 4.0 + eta * k.D2) / slope;
  w.lo = std::max(w.lo, z + gamma_min);
  if (w.empty())
    return {0.0, 0.0};
  return w;
}

namespace {

std::vector<double> scan_grid(double lo, double hi, int points,
                              std::initializer_list<double> splits) {
  std::vector<double> xs;
  auto add_uniform = [&](double a, double b) {
    if (!(a < b))
      return;
    for (int i = 0; i < points; ++i)
      xs.push_back(a + (b - a) * i / (points - 1.0));
  };
  add_uniform(lo, hi);
  // Dense sub-grids on either side of the split points keep narrow physical
  // sub-windows resolved when the full window is very wide.
  std::vector<double> cuts{lo};
  for (double s : splits)
    if (s > lo && s < hi)
      cuts.push_back(s);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  if (cuts.size() > 2)
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      add_uniform(cuts[i], cuts[i + 1]);
  // Geometric ladders toward each split point resolve levels lying many
  // decades closer to it than the window is wide (heavy masses).
  for (std::size_t i = 1; i + 1 < cuts.size(); ++i) {
    const double s = cuts[i];
    const double left = s - cuts[i - 1], right = cuts[i + 1] - s;
    for (int k = 0; k < points; ++k) {
      const double g = std::pow(10.0, -14.0 + 14.0 * k / (points - 1.0));
      xs.push_back(s - left * g);
      xs.push_back(s + right * g);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

struct Bracketed {
  double x = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
};

std::vector<Bracketed> find_roots(const OffsetResidual &f,
                                  const std::vector<double> &xs,
                                  const SolveOptions &opt) {
  std::vector<double> vals(xs.size(), nan_value);
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (const auto r = f(xs[i]))
      vals[i] = r->value;

  auto value_at = [&](double x) {
    const auto r = f(x);
    return r ? r->value : nan_value;
  };
  // Relative to the root, down to adjacent doubles: a fixed floor tied to a
  // wide window would stop far short of roots lying near offset zero.
  auto tol = [&](double a, double b) {
    return std::abs(b - a) <=
               opt.relative_tolerance * std::max(std::abs(a), std::abs(b)) ||
           std::nextafter(a, b) == b;
  };

  std::vector<Bracketed> out;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double va = vals[i], vb = vals[i + 1];
    if (!std::isfinite(va) || !std::isfinite(vb))
      continue;
    if (va == 0.0) {
      out.push_back({xs[i], xs[i], xs[i], 0});
      continue;
    }
    if (va * vb > 0.0)
      continue;
    if (vb == 0.0)
      continue; // picked up as va == 0 on the next step
    std::uintmax_t iters = 200;
    const auto [a, b] =
        boost::math::tools::bisect(value_at, xs[i], xs[i + 1], tol, iters);
    out.push_back({0.5 * (a + b), xs[i], xs[i + 1], static_cast<int>(iters)});
  }
  return out;
}

std::vector<EnergyLevel> finish_levels(const QuantumState &st, LevelKind kind,
                                       Convention conv, double reference,
                                       const OffsetResidual &f,
                                       std::vector<Bracketed> roots,
                                       double merge_fraction) {
  std::sort(roots.begin(), roots.end(),
            [](const auto &a, const auto &b) { return a.x < b.x; });
  std::vector<EnergyLevel> levels;
  for (const auto &r : roots) {
    if (!levels.empty() &&
        r.x - levels.back().offset <=
            merge_fraction *
                std::max(std::abs(r.x), std::abs(levels.back().offset)))
      continue;
    const auto rv = f(r.x);
    if (!rv)
      continue;
    // A sign change across a jump is not a root.
    if (std::abs(rv->value) > 1e-8 * std::max(rv->scale, 1e-300))
      continue;
    EnergyLevel lvl{st};
    lvl.kind = kind;
    lvl.convention = conv;
    lvl.reference = reference;
    lvl.offset = r.x;
    lvl.E = reference + r.x;
    lvl.residual = rv->value;
    lvl.residual_scale = rv->scale;
    lvl.bracket_lo = reference + r.lo;
    lvl.bracket_hi = reference + r.hi;
    lvl.iterations = r.iterations;
    levels.push_back(lvl);
  }
  return levels;
}

} // namespace

std::vector<EnergyLevel> solve_levels(const Model &m, const QuantumState &st,
                                      const SolveOptions &opt) {
  if (opt.scan_points < 2)
    fail(ErrorCode::InvalidArgument, "scan needs at least two points");
  const auto w = physical_window(m, st);
  if (w.empty())
    return {};
  const OffsetResidual f = [&](double x) -> std::optional<ResidualValue> {
    try {
      return residual_offset(m, st, x);
    } catch (const Error &) {
      return std::nullopt;
    }
  };
  const double width = w.hi - w.lo;
  const double pad = 1e-12 * width;
  // beta^2 = -offset * gamma changes sign at offset = 0 and at gamma = 0.
  const double z = m.sym.branch == Branch::Spin ? m.sym.C - 2.0 * m.sym.M
                                                : 2.0 * m.sym.M + m.sym.C;
  const auto xs = scan_grid(w.lo + pad, w.hi - pad, opt.scan_points, {0.0, z});
  auto roots = find_roots(f, xs, opt);
  return finish_levels(st, level_kind(m), m.convention, reference_energy(m.sym),
                       f, std::move(roots), opt.merge_fraction);
}

const EnergyLevel *primary_level(const std::vector<EnergyLevel> &levels) {
  if (levels.empty())
    return nullptr;
  if (levels.front().convention == Convention::Standard)
    return &*std::min_element(levels.begin(), levels.end(),
                              [](const auto &a, const auto &b) {
                                return std::abs(a.offset) < std::abs(b.offset);
                              });
  return &*std::min_element(levels.begin(), levels.end(),
                            [](const auto &a, const auto &b) {
                              return std::abs(a.E) < std::abs(b.E);
                            });
}

//==============================================================================
ThPotential gmp_from(double alpha_gmp, double r_e, double D) {
  if (!(alpha_gmp > 0.0))
    fail(ErrorCode::InvalidArgument, "generalized Morse needs alpha > 0");
  return ThPotential::make(D, alpha_gmp, r_e, std::exp(-alpha_gmp * r_e));
}

double gmp_value(double alpha_gmp, double r_e, double D, double r) {
  const double b = std::expm1(alpha_gmp * r_e);
  const double q = 1.0 - b / std::expm1(alpha_gmp * r);
  return D * q * q;
}

//==============================================================================
NonRelParams nonrel_params(double mu, const ThPotential &pot, int l, double E) {
  if (l < 0)
    fail(ErrorCode::InvalidArgument, "orbital quantum number must be >= 0");
  if (!(mu > 0.0))
    fail(ErrorCode::InvalidArgument, "reduced mass must be > 0");
  EffectiveInputs in;
  in.eta = l * (l + 1.0);
  in.gamma = 2.0 * mu;
  in.beta_sq = -2.0 * mu * E;
  in.D = pot.D();
  in.D_shift = pot.D();
  in.alpha = pot.alpha();
  in.r_e = pot.r_e();
  in.c_h = pot.c_h();
  in.coeffs = pekeris_coefficients(in.alpha, in.c_h);
  const auto p = nu_problem_from(in);
  return {mu, 2.0 * mu * E, 2.0 * mu * pot.D(), p.xi1, p.xi2, p.xi3};
}

namespace {

ResidualValue nonrel_residual_terms(double mu, const ThPotential &pot, int n,
                                    int l, double E) {
  EffectiveInputs in;
  in.eta = l * (l + 1.0);
  in.gamma = 2.0 * mu;
  in.beta_sq = -2.0 * mu * E;
  in.D = pot.D();
  in.D_shift = pot.D();
  in.alpha = pot.alpha();
  in.r_e = pot.r_e();
  in.c_h = pot.c_h();
  in.coeffs = pekeris_coefficients(in.alpha, in.c_h);
  return residual_from(in, n, {1, 1}, 0.0);
}

} // namespace

double nonrel_residual(double mu, const ThPotential &pot, int n, int l,
                       double E) {
  if (l < 0 || !(mu > 0.0))
    fail(ErrorCode::InvalidArgument, "nonrel residual needs l >= 0, mu > 0");
  return nonrel_residual_terms(mu, pot, n, l, E).value;
}

std::vector<EnergyLevel> solve_nonrel(double mu, const ThPotential &pot, int n,
                                      int l, const SolveOptions &opt) {
  if (l < 0 || !(mu > 0.0) || n < 0)
    fail(ErrorCode::InvalidArgument, "nonrel solve needs n, l >= 0, mu > 0");
  const auto k = pekeris_coefficients(pot);
  const double eta = l * (l + 1.0);
  const double re2 = pot.r_e() * pot.r_e();
  // c8 >= 0: E <= D + eta D0 / (2 mu r_e^2); c9 does not depend on E.
  const double hi = pot.D() + eta * k.D0 / (2.0 * mu * re2);
  const double lo = -(std::abs(hi) + pot.D());
  const double width = hi - lo;
  const OffsetResidual f = [&](double E) -> std::optional<ResidualValue> {
    try {
      return nonrel_residual_terms(mu, pot, n, l, E);
    } catch (const Error &) {
      return std::nullopt;
    }
  };
  const double pad = 1e-12 * width;
  const auto xs = scan_grid(lo + pad, hi - pad, opt.scan_points, {0.0});
  auto roots = find_roots(f, xs, opt);
  return finish_levels(QuantumState::make(n, -(l + 1)), LevelKind::NonRel,
                       Convention::Standard, 0.0, f, std::move(roots),
                       opt.merge_fraction);
}

} // namespace thspec
