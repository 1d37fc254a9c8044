#include "frozen_values.hpp"
#include "test_support.hpp"
#include "thspec/error.hpp"
#include "thspec/jacobi.hpp"
#include "thspec/nu_engine.hpp"
#include "thspec/spectra.hpp"
#include <boost/math/special_functions/jacobi.hpp>
#include <doctest.h>
#include <random>

using namespace thspec;
using test_support::rel_err;

//==============================================================================
TEST_CASE("derived constants against the arbitrary-precision oracle") {
  const NuProblem p{1.0, 0.5, 0.5, 2.0, 3.0, 1.0};
  const auto k = derive_constants(p);
  CHECK(k.c4 == frozen::nu_c4);
  CHECK(k.c5 == frozen::nu_c5);
  CHECK(k.c6 == frozen::nu_c6);
  CHECK(k.c7 == frozen::nu_c7);
  CHECK(k.c8 == frozen::nu_c8);
  CHECK(k.c9 == frozen::nu_c9);
  CHECK(rel_err(k.c10, frozen::nu_c10) < 1e-15);
  CHECK(rel_err(k.c11, frozen::nu_c11) < 1e-15);
  CHECK(rel_err(k.c12, frozen::nu_c12) < 1e-15);
  CHECK(rel_err(k.c13, frozen::nu_c13) < 1e-15);
  CHECK(rel_err(energy_residual(p, 2), frozen::nu_residual_n2) < 1e-14);
  CHECK(k.validity.c8_nonnegative);
  CHECK(k.validity.c9_nonnegative);
}

TEST_CASE("c9 identity holds for random problems") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> upos(0.05, 1.0);
  for (int i = 0; i < 200; ++i) {
    NuProblem p{1.0, upos(rng), u(rng), upos(rng), u(rng), upos(rng)};
    if (p.c3 == 0.0)
      continue;
    NuConstants k;
    try {
      k = derive_constants(p);
    } catch (const Error &) {
      continue; // negative radicand
    }
    const double lhs = k.c9;
    const double rhs = k.c3 * (k.c7 + k.c3 * k.c8) + k.c6;
    const double scale = std::abs(k.c6) + std::abs(k.c3 * k.c7) +
                         std::abs(k.c3 * k.c3 * k.c8);
    CHECK(std::abs(lhs - rhs) <= 1e-14 * std::max(scale, 1.0));
  }
}

TEST_CASE("c3 = 0 is rejected") {
  CHECK_THROWS_AS(derive_constants(NuProblem{1.0, 0.5, 0.0, 1.0, 1.0, 1.0}),
                  Error);
}

TEST_CASE("tau' is negative on physical states") {
  for (int which : {2, 3}) {
    const double C = which == 2 ? 10.0 : -20.0;
    const auto m = test_support::preset_model(
        which, PotentialForm::TietzHua, Convention::Standard,
        which == 2 ? 0.01 : -0.01, C);
    for (int n : {0, 1, 2})
      for (int kappa : {-1, -2, -3, -4}) {
        const auto st = QuantumState::make(n, kappa);
        const auto levels = solve_levels(m, st);
        const auto *lvl = primary_level(levels);
        if (!lvl)
          continue;
        const auto p = nu_problem_from(effective_inputs(m, st, lvl->offset));
        const auto k = derive_constants(p, convention_signs(m));
        CHECK(nu_intermediates(k, p).tau_prime < 0.0);
      }
  }
}

TEST_CASE("solution of the template equation at a root") {
  // Standard spin (1, -2): psi = s^c12 (1 - c3 s)^c13 P_1^(c10,c11)(1 - 2 c3 s)
  // must satisfy the hypergeometric-type equation.
  const auto m = test_support::preset_model(2, PotentialForm::TietzHua,
                                            Convention::Standard);
  const auto st = QuantumState::make(1, -2);
  const auto levels = solve_levels(m, st);
  REQUIRE(primary_level(levels));
  const auto p =
      nu_problem_from(effective_inputs(m, st, primary_level(levels)->offset));
  const auto k = derive_constants(p);
  const auto w = wavefunction_params(k);
  auto psi = [&](long double s) {
    return std::pow(s, (long double)w.exponent_s) *
           std::pow(1.0L - p.c3 * s, (long double)w.exponent_1mc3s) *
           (long double)jacobi_eval(1, w.jacobi_a, w.jacobi_b,
                                    (double)(1.0L - 2.0L * p.c3 * s));
  };
  for (double s : {0.4, 0.9, 1.5}) {
    const long double h = 1e-4L * s;
    const long double f0 = psi(s), fp = psi(s + h), fm = psi(s - h);
    const long double d1 = (fp - fm) / (2 * h);
    const long double d2 = (fp - 2 * f0 + fm) / (h * h);
    const long double q = s * (1.0L - p.c3 * s);
    const long double t1 = d2;
    const long double t2 = (p.c1 - p.c2 * s) / q * d1;
    const long double t3 = (-p.xi1 * s * s + p.xi2 * s - p.xi3) / (q * q) * f0;
    const long double scale = std::abs(t1) + std::abs(t2) + std::abs(t3);
    CAPTURE(s);
    CHECK(std::abs(t1 + t2 + t3) <= 1e-5L * scale);
  }
}

//==============================================================================
TEST_CASE("Jacobi recurrence against the hypergeometric sum and Boost") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uab(-0.9, 6.0);
  std::uniform_real_distribution<double> ux(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = uab(rng), b = uab(rng), x = ux(rng);
    for (int n = 0; n <= 10; ++n) {
      const double rec = jacobi_eval(n, a, b, x);
      const double hyp = jacobi_hypergeometric_sum(n, a, b, x);
      const double ref = boost::math::jacobi(static_cast<unsigned>(n), a, b, x);
      const double scale = std::max(1.0, std::abs(ref));
      CAPTURE(n);
      CAPTURE(a);
      CAPTURE(b);
      CAPTURE(x);
      CHECK(std::abs(rec - hyp) <= 1e-12 * scale);
      CHECK(std::abs(rec - ref) <= 1e-12 * scale);
    }
  }
  CHECK(rel_err(jacobi_eval(5, 0.7, 1.3, 0.4), frozen::jacobi_5_07_13_04) <
        1e-14);
}

TEST_CASE("Jacobi derivative and large-index stability") {
  for (double x : {-0.7, 0.1, 0.95}) {
    const double h = 1e-6;
    const double num =
        (jacobi_eval(6, 1.5, 2.5, x + h) - jacobi_eval(6, 1.5, 2.5, x - h)) /
        (2 * h);
    CHECK(rel_err(jacobi_derivative(6, 1.5, 2.5, x), num) < 1e-7);
  }
  const auto big = jacobi_log(2000, 400.0, 1500.0, 0.3);
  CHECK(std::isfinite(big.log_abs));
  CHECK(jacobi_eval(0, 3.0, 4.0, 0.2) == 1.0);
}
