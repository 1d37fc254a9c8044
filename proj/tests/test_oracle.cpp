#include "frozen_values.hpp"
#include "test_support.hpp"
#include "thspec/oracle.hpp"
#include <doctest.h>

using namespace thspec;
using test_support::preset_model;
using test_support::rel_err;

//==============================================================================
TEST_CASE("three-dimensional oscillator sanity check") {
  // -u'' + (r^2 + l(l+1)/r^2) u: lowest eigenvalues 3 (l = 0) and 5 (l = 1).
  for (auto [l, expected] : {std::pair{0, 3.0}, std::pair{1, 5.0}}) {
    const auto grid = FdGrid::make(1e-9, 12.0, 8000);
    std::vector<double> U(grid.N);
    for (std::size_t i = 0; i < grid.N; ++i) {
      const double r = grid.r_min + (i + 1.0) * grid.h();
      U[i] = r * r + l * (l + 1.0) / (r * r);
    }
    CHECK(std::abs(fd_mode_eigenvalue(U, grid.h(), 0) - expected) < 1e-5);
  }
}

TEST_CASE("grid halving") {
  const auto g = FdGrid::make(0.1, 10.1, 99);
  const auto h = g.halved();
  CHECK(h.N == 199);
  CHECK(rel_err(h.h(), g.h() / 2) < 1e-15);
}

TEST_CASE("Pekeris-mode oracle reproduces the analytic spin level") {
  const auto m = preset_model(2, PotentialForm::TietzHua, Convention::Standard);
  const auto st = QuantumState::make(0, -2);
  const auto res = solve_self_consistent(m, st, CentrifugalMode::Pekeris);
  CHECK(rel_err(res.E, frozen::std_spin[0].E) < 1e-6);
  CHECK(res.richardson_change < 1e-6);
  const auto exact = solve_self_consistent(m, st, CentrifugalMode::Exact);
  CHECK(rel_err(exact.E, res.E) < 1e-4);
}

TEST_CASE("nonrelativistic oracle") {
  const auto pot = ThPotential::make(5.0, 0.988879, 2.40873, 0.01);
  const double mu = 10.0;
  const auto analytic = solve_nonrel(mu, pot, 1, 1);
  REQUIRE_FALSE(analytic.empty());
  const auto grid = default_grid(pot, 6000);
  const double coarse =
      solve_nonrel_fd(mu, pot, 1, 1, CentrifugalMode::Pekeris, grid);
  const double fine =
      solve_nonrel_fd(mu, pot, 1, 1, CentrifugalMode::Pekeris, grid.halved());
  // Second-order scheme: one Richardson step.
  const double fd = (4.0 * fine - coarse) / 3.0;
  CHECK(rel_err(fd, analytic.front().E) < 1e-6);
}
