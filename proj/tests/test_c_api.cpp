#include "frozen_values.hpp"
#include "thspec/thspec.h"
#include <cmath>
#include <cstring>
#include <doctest.h>
#include <string>
#include <vector>

namespace {

thspec_model *preset(int which, thspec_convention conv) {
  thspec_model_params p{};
  REQUIRE(thspec_preset(which, &p) == THSPEC_OK);
  p.convention = conv;
  thspec_model *m = nullptr;
  REQUIRE(thspec_model_create(&p, &m) == THSPEC_OK);
  return m;
}

} // namespace

//==============================================================================
TEST_CASE("version and status names") {
  CHECK(std::string(thspec_version()) == "1.0.0");
  CHECK(std::string(thspec_status_name(THSPEC_OK)) == "ok");
  CHECK(std::string(thspec_status_name(THSPEC_POLE_IN_DOMAIN)) ==
        "PoleInDomain");
}

TEST_CASE("model round trip and levels") {
  auto *m = preset(2, THSPEC_CONVENTION_TABULATED);
  thspec_model_params back{};
  REQUIRE(thspec_model_params_get(m, &back) == THSPEC_OK);
  CHECK(back.potential.r_e == 2.40873);
  thspec_level l{};
  REQUIRE(thspec_primary_level(m, 0, -2, &l) == THSPEC_OK);
  CHECK(std::abs(l.E - 0.0156445) < 5e-6);
  thspec_level partner{};
  REQUIRE(thspec_primary_level(m, 0, 1, &partner) == THSPEC_OK);
  CHECK(std::abs(partner.E - l.E) < 1e-10);
  size_t count = 0;
  REQUIRE(thspec_solve_levels(m, 0, -2, nullptr, 0, &count) == THSPEC_OK);
  CHECK(count >= 1);
  std::vector<thspec_level> all(count);
  REQUIRE(thspec_solve_levels(m, 0, -2, all.data(), all.size(), &count) ==
          THSPEC_OK);
  double lo = 0, hi = 0;
  REQUIRE(thspec_window(m, 0, -2, &lo, &hi) == THSPEC_OK);
  CHECK(lo < hi);
  double R = 0;
  REQUIRE(thspec_residual(m, 0, -2, l.E, &R) == THSPEC_OK);
  CHECK(std::abs(R) <= 1e-8 * l.residual_scale);
  thspec_model_destroy(m);
}

TEST_CASE("errors map to status codes with messages") {
  thspec_model_params p{};
  REQUIRE(thspec_preset(2, &p) == THSPEC_OK);
  p.potential.c_h = 0.5;
  thspec_model *m = nullptr;
  CHECK(thspec_model_create(&p, &m) == THSPEC_POLE_IN_DOMAIN);
  CHECK(m == nullptr);
  CHECK(std::strlen(thspec_last_error()) > 0);
  CHECK(thspec_model_create(nullptr, &m) == THSPEC_INVALID_ARGUMENT);
  auto *std3 = preset(3, THSPEC_CONVENTION_STANDARD);
  thspec_level l{};
  CHECK(thspec_primary_level(std3, 1, -1, &l) == THSPEC_NO_BOUND_STATE);
  thspec_model_destroy(std3);
  CHECK(thspec_preset(4, &p) == THSPEC_INVALID_ARGUMENT);
  thspec_model_destroy(nullptr);
}

TEST_CASE("labels and coefficients") {
  char buf[32];
  CHECK(thspec_state_label(THSPEC_PSPIN, 1, 2, buf, sizeof buf) == 8);
  CHECK(std::string(buf) == "0d_{3/2}");
  char tiny[4];
  thspec_state_label(THSPEC_SPIN, 0, -2, tiny, sizeof tiny);
  CHECK(std::string(tiny) == "0p_");
  double k[3];
  REQUIRE(thspec_pekeris_coefficients(2.0, 0.5, k) == THSPEC_OK);
  CHECK(k[0] == frozen::pekeris_a2_c05[0]);
  thspec_potential_params pp{5.0, 0.988879, 2.40873, 0.01};
  double v = 0;
  REQUIRE(thspec_potential_value(&pp, 3.0, &v) == THSPEC_OK);
  CHECK(std::abs(v - frozen::th_value_r3) < 1e-14);
  double E = 0;
  REQUIRE(thspec_nonrel_level(&pp, 10.0, 0, 1, &E) == THSPEC_OK);
  CHECK(E > 0.0);
}

TEST_CASE("spinor handle") {
  auto *m = preset(2, THSPEC_CONVENTION_STANDARD);
  thspec_spinor *s = nullptr;
  REQUIRE(thspec_spinor_create(m, 1, -2, 1, &s) == THSPEC_OK);
  thspec_spinor_info info{};
  REQUIRE(thspec_spinor_info_get(s, &info) == THSPEC_OK);
  CHECK(info.nodes == 1);
  CHECK(info.normalized == 1);
  double norm = 0;
  REQUIRE(thspec_spinor_density_integral(s, &norm) == THSPEC_OK);
  CHECK(std::abs(norm - 1.0) < 1e-8);
  const double r[3] = {1.5, 2.4, 3.5};
  double F[3], G[3];
  REQUIRE(thspec_spinor_sample(s, r, 3, F, G) == THSPEC_OK);
  for (double g : G)
    CHECK(std::isfinite(g));
  double nodes[4];
  size_t count = 0;
  REQUIRE(thspec_spinor_nodes(s, nodes, 4, &count) == THSPEC_OK);
  CHECK(count == 1);
  thspec_spinor_destroy(s);
  thspec_model_destroy(m);
}

TEST_CASE("oracle through the C interface") {
  auto *m = preset(2, THSPEC_CONVENTION_STANDARD);
  thspec_oracle_options o;
  thspec_oracle_options_default(&o);
  o.grid_n = 3000;
  thspec_oracle_result r{};
  REQUIRE(thspec_oracle_solve(m, 0, -2, &o, &r) == THSPEC_OK);
  CHECK(std::abs(r.E - frozen::std_spin[0].E) / frozen::std_spin[0].E < 1e-6);
  thspec_model_destroy(m);
}

TEST_CASE("registry, tables and calibration") {
  thspec_registry *reg = nullptr;
  REQUIRE(thspec_registry_load_default(&reg) == THSPEC_OK);
  CHECK(thspec_registry_size(reg) == 2);
  thspec_molecule mol{};
  REQUIRE(thspec_registry_get(reg, 0, &mol) == THSPEC_OK);
  CHECK(std::string(mol.name) == "H2");
  CHECK(thspec_registry_get(reg, 7, &mol) == THSPEC_INVALID_ARGUMENT);

  thspec_molecular_options mo;
  thspec_molecular_options_default(&mo);
  thspec_level lvl{};
  double eV = 0;
  REQUIRE(thspec_molecule_level_eV(reg, "H2", THSPEC_SPIN, &mo, 0, -1, &lvl,
                                   &eV) == THSPEC_OK);
  CHECK(eV > 0.2);
  CHECK(eV < 0.3);
  CHECK(thspec_molecule_level_eV(reg, "XX", THSPEC_SPIN, &mo, 0, -1, &lvl,
                                 &eV) == THSPEC_INVALID_ARGUMENT);

  thspec_table *t = nullptr;
  REQUIRE(thspec_table_compute(2, THSPEC_CONVENTION_TABULATED, nullptr,
                               nullptr, &t) == THSPEC_OK);
  CHECK(thspec_table_row_count(t) == 8);
  CHECK(thspec_table_column_count(t) == 3);
  CHECK(thspec_table_all_within(t) == 1);
  thspec_table_row row{};
  REQUIRE(thspec_table_row_get(t, 0, &row) == THSPEC_OK);
  CHECK(std::string(row.label) == "0p_{3/2}, 0p_{1/2}");
  thspec_table_cell cell{};
  REQUIRE(thspec_table_cell_get(t, 0, 2, &cell) == THSPEC_OK);
  CHECK(cell.golden == 0.0156445);
  CHECK(thspec_table_cell_get(t, 0, 3, &cell) == THSPEC_INVALID_ARGUMENT);
  thspec_table_destroy(t);

  REQUIRE(thspec_table_compute(6, THSPEC_CONVENTION_STANDARD, reg, &mo, &t) ==
          THSPEC_OK);
  CHECK(thspec_table_column_count(t) == 2);
  thspec_table_destroy(t);
  CHECK(thspec_table_compute(5, THSPEC_CONVENTION_STANDARD, nullptr, &mo,
                             &t) == THSPEC_INVALID_ARGUMENT);

  thspec_calibration *cal = nullptr;
  REQUIRE(thspec_calibrate(reg, &cal) == THSPEC_OK);
  CHECK(thspec_calibration_size(cal) == 8);
  CHECK(thspec_calibration_report_lines(cal) == 9);
  thspec_calibration_entry e{};
  REQUIRE(thspec_calibration_entry_get(cal, 0, &e) == THSPEC_OK);
  CHECK(e.cells_total == 24);
  thspec_calibration_destroy(cal);
  thspec_registry_destroy(reg);
}
