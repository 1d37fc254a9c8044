#include "frozen_values.hpp"
#include "test_support.hpp"
#include "thspec/pekeris.hpp"
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <doctest.h>
#include <random>

using namespace thspec;
using test_support::rel_err;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

// Value and first two x-derivatives at x = 0 of D0 + D1 y + D2 y^2, taken by
// central differences in 50-digit arithmetic.
std::array<double, 3> pekeris_jet(double alpha, double c,
                                  const PekerisCoefficients &k) {
  const Big a = alpha, cc = c, d0 = k.D0, d1 = k.D1, d2 = k.D2;
  auto f = [&](const Big &x) {
    const Big u = exp(-a * x);
    const Big y = u / (1 - cc * u);
    return d0 + d1 * y + d2 * y * y;
  };
  const Big h("1e-12");
  const Big f0 = f(0), fp = f(h), fm = f(-h);
  return {static_cast<double>(f0), static_cast<double>((fp - fm) / (2 * h)),
          static_cast<double>((fp - 2 * f0 + fm) / (h * h))};
}

} // namespace

//==============================================================================
TEST_CASE("coefficients against the arbitrary-precision oracle") {
  const auto a = pekeris_coefficients(2.0, 0.5);
  CHECK(a.D0 == frozen::pekeris_a2_c05[0]);
  CHECK(a.D1 == frozen::pekeris_a2_c05[1]);
  CHECK(a.D2 == frozen::pekeris_a2_c05[2]);
  const auto b = pekeris_coefficients(0.988879 * 2.40873, 0.01);
  CHECK(rel_err(b.D0, frozen::pekeris_tab2[0]) < 1e-14);
  CHECK(rel_err(b.D1, frozen::pekeris_tab2[1]) < 1e-14);
  CHECK(rel_err(b.D2, frozen::pekeris_tab2[2]) < 1e-14);
}

TEST_CASE("second-order Taylor match of 1/(1+x)^2 at equilibrium") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> ua(1.0, 6.0);
  for (int i = 0; i < 20; ++i) {
    const double alpha = ua(rng);
    const double hi = std::min(0.3, std::exp(-alpha));
    std::uniform_real_distribution<double> uc(-0.3, hi);
    const double c = uc(rng);
    const auto jet = pekeris_jet(alpha, c, pekeris_coefficients(alpha, c));
    CAPTURE(alpha);
    CAPTURE(c);
    CHECK(rel_err(jet[0], 1.0) < 1e-8);
    CHECK(rel_err(jet[1], -2.0) < 1e-8);
    CHECK(rel_err(jet[2], 6.0) < 1e-8);
  }
}

TEST_CASE("approximate centrifugal term near equilibrium") {
  const auto pot = ThPotential::make(5.0, 0.988879, 2.40873, 0.01);
  const auto k = pekeris_coefficients(pot);
  const double r = 1.2 * pot.r_e();
  const double approx = centrifugal_pekeris(2.0, pot, k, r);
  CHECK(rel_err(approx, frozen::centrifugal_pekeris_1p2re) < 1e-13);
  CHECK(rel_err(approx / centrifugal_exact(2.0, r),
                frozen::centrifugal_ratio_1p2re) < 1e-13);
  CHECK(rel_err(centrifugal_pekeris(2.0, pot, k, pot.r_e()),
                centrifugal_exact(2.0, pot.r_e())) < 1e-14);
}

TEST_CASE("validity flag beyond |x| = 0.5") {
  const auto pot = ThPotential::make(5.0, 1.0, 2.0, 0.0);
  CHECK_FALSE(pekeris_beyond_validity(pot, 2.9));
  CHECK(pekeris_beyond_validity(pot, 3.2));
  CHECK(pekeris_beyond_validity(pot, 0.9));
}
