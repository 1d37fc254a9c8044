#include "test_support.hpp"
#include "thspec/error.hpp"
#include "thspec/registry.hpp"
#include "thspec/tables.hpp"
#include <doctest.h>

using namespace thspec;

//==============================================================================
TEST_CASE("golden tables are embedded with their row order") {
  CHECK(golden_table(2).rows.size() == 8);
  CHECK(golden_table(3).rows.size() == 8);
  CHECK(golden_table(5).rows.size() == 6);
  CHECK(golden_table(6).rows.size() == 6);
  CHECK(golden_table(2).rows[0].values[2] == 0.0156445);
  CHECK(golden_table(6).rows[5].values[1] == -0.1712385573);
  for (const auto &row : golden_table(3).rows)
    for (double v : row.values)
      CHECK(v < 0.0);
  CHECK_THROWS_AS(golden_table(4), Error);
}

TEST_CASE("presets") {
  const auto a = preset_table2();
  CHECK(a.r_e == 2.40873);
  CHECK(a.b_h == 0.988879);
  CHECK(a.C == 10.0);
  CHECK(a.branch == Branch::Spin);
  const auto b = preset_table3();
  CHECK(b.C == -10.0);
  CHECK(b.c_h == -0.01);
  CHECK(b.branch == Branch::Pspin);
}

TEST_CASE("three-figure matching") {
  CHECK(matches_three_figures(4.4951, 4.496299243));
  CHECK_FALSE(matches_three_figures(4.4900, 4.496299243));
  CHECK(matches_three_figures(-0.0491, -0.04908477248));
  CHECK_FALSE(matches_three_figures(std::nan(""), 1.0));
}

TEST_CASE("Morse columns of the pspin table are reproduced") {
  const auto rep = compute_dirac_table(3);
  for (const auto &row : rep.rows) {
    CHECK(row.cells[0].within);
    CHECK(row.cells[1].within);
    for (const auto &c : row.cells)
      CHECK(c.computed < 0.0);
  }
}

TEST_CASE("molecular tables report every cell and a calibration ranking") {
  const auto reg = load_default_registry();
  const auto rep = compute_molecular_table(5, reg, MolecularOptions{});
  REQUIRE(rep.rows.size() == 6);
  for (const auto &row : rep.rows)
    CHECK(row.cells.size() == 2);
  const auto cal = calibrate_molecular_tables(reg);
  CHECK(cal.entries.size() == 8);
  for (std::size_t i = 1; i < cal.entries.size(); ++i)
    CHECK(cal.entries[i - 1].cells_matched >= cal.entries[i].cells_matched);
  const auto lines = discrepancy_report(cal);
  CHECK(lines.size() == cal.entries.size() + 1);
}

TEST_CASE("molecular levels tend to the Schrodinger spectrum") {
  const auto reg = load_default_registry();
  const MolecularOptions opt;
  const auto h2 = to_natural_units(*find_molecule(reg, "H2"), opt.constants);
  const auto m = molecular_model(h2, Branch::Spin, opt);
  const auto levels = solve_levels(m, QuantumState::make(0, -1));
  const auto *lvl = primary_level(levels);
  REQUIRE(lvl);
  const auto nr = solve_nonrel(h2.M, h2.potential(), 0, 0);
  REQUIRE_FALSE(nr.empty());
  CHECK(test_support::rel_err(lvl->offset, nr.front().E) < 1e-6);
}
