#include "thspec/tables.hpp"
#include "thspec/error.hpp"
#include "thspec/registry.hpp"
#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <future>
#include <limits>

namespace thspec {

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

constexpr GoldenRow table2_rows[] = {
    {0, -2, 1, "0p_{3/2}, 0p_{1/2}", {0.0188481, 0.0158972, 0.0156445}},
    {0, -3, 2, "0d_{5/2}, 0d_{3/2}", {0.0336562, 0.0289087, 0.0292850}},
    {0, -4, 3, "0f_{7/2}, 0f_{5/2}", {0.0525273, 0.0454736, 0.0468568}},
    {0, -5, 4, "0g_{9/2}, 0g_{7/2}", {0.0754350, 0.0655857, 0.0683657}},
    {1, -2, 1, "1p_{3/2}, 1p_{1/2}", {0.0899995, 0.0721426, 0.0711732}},
    {1, -3, 2, "1d_{5/2}, 1d_{3/2}", {0.1136725, 0.0933683, 0.0926634}},
    {1, -4, 3, "1f_{7/2}, 1f_{5/2}", {0.1438031, 0.120011, 0.119939}},
    {1, -5, 4, "1g_{9/2}, 1g_{7/2}", {0.1791425, 0.151061, 0.152013}},
};

constexpr GoldenRow table3_rows[] = {
    {1, -1, 2, "1s_{1/2}, 0d_{3/2}", {-0.0064123, -0.0063644, -0.0078235}},
    {1, -2, 3, "1p_{3/2}, 0f_{5/2}", {-0.0155771, -0.0152135, -0.0192390}},
    {1, -3, 4, "1d_{5/2}, 0g_{7/2}", {-0.0243659, -0.0233169, -0.0308043}},
    {1, -4, 5, "1f_{7/2}, 0h_{9/2}", {-0.0305297, -0.0285678, -0.0403430}},
    {2, -1, 2, "2s_{1/2}, 1d_{3/2}", {-0.0070204, -0.0070051, -0.0085285}},
    {2, -2, 3, "2p_{3/2}, 1f_{5/2}", {-0.0190441, -0.0188890, -0.0232805}},
    {2, -3, 4, "2d_{5/2}, 1g_{7/2}", {-0.0337719, -0.0331986, -0.0415466}},
    {2, -4, 5, "2f_{7/2}, 1h_{9/2}", {-0.0492150, -0.0478538, -0.0611045}},
};

constexpr GoldenRow table5_rows[] = {
    {1, -1, 0, "1s_{1/2}", {4.496299243, 0.04301938173, nan_value}},
    {1, -2, 0, "1p_{3/2}", {4.792825206, 0.04908477248, nan_value}},
    {1, -3, 0, "1d_{5/2}", {5.265998324, 0.06198365883, nan_value}},
    {2, -1, 0, "2s_{1/2}", {5.208297483, 0.1330310673, nan_value}},
    {2, -2, 0, "2p_{3/2}", {5.393734566, 0.1391726596, nan_value}},
    {2, -3, 0, "2d_{5/2}", {5.714484641, 0.1517415539, nan_value}},
};

constexpr GoldenRow table6_rows[] = {
    {1, -1, 0, "1s_{1/2}", {-4.716308462, -0.04908477248, nan_value}},
    {1, -2, 0, "1p_{3/2}", {-5.219487600, -0.06198365885, nan_value}},
    {1, -3, 0, "1d_{5/2}", {-5.808371132, -0.0828077168, nan_value}},
    {2, -1, 0, "2s_{1/2}", {-5.377765079, -0.1391726596, nan_value}},
    {2, -2, 0, "2p_{3/2}", {-5.738903598, -0.1517415539, nan_value}},
    {2, -3, 0, "2d_{5/2}", {-6.198359366, -0.1712385573, nan_value}},
};

const GoldenTable golden2{2,
                          "Dirac spectrum, spin symmetry (fm^-1)",
                          {"morse-2", "morse-1", "c_h=0.01"},
                          3,
                          table2_rows};
const GoldenTable golden3{3,
                          "Dirac hole states, pspin symmetry (fm^-1)",
                          {"morse-2", "morse-1", "c_h=-0.01"},
                          3,
                          table3_rows};
const GoldenTable golden5{5,
                          "H2 and I2, spin symmetry (eV)",
                          {"H2", "I2", ""},
                          2,
                          table5_rows};
const GoldenTable golden6{6,
                          "H2 and I2, pspin symmetry (eV)",
                          {"H2", "I2", ""},
                          2,
                          table6_rows};

constexpr double dirac_tolerance = 5e-6;

// Rows are independent; solve them concurrently and assemble in order.
template <class F> std::vector<TableRow> parallel_rows(std::size_t count, F f) {
  std::vector<std::future<TableRow>> jobs;
  jobs.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    jobs.push_back(std::async(std::launch::async, f, i));
  std::vector<TableRow> rows;
  rows.reserve(count);
  for (auto &j : jobs)
    rows.push_back(j.get());
  return rows;
}

double primary_energy(const Model &m, const QuantumState &st) {
  const auto levels = solve_levels(m, st);
  const auto *p = primary_level(levels);
  return p ? p->E : nan_value;
}

} // namespace

const GoldenTable &golden_table(int which) {
  switch (which) {
  case 2:
    return golden2;
  case 3:
    return golden3;
  case 5:
    return golden5;
  case 6:
    return golden6;
  default:
    fail(ErrorCode::InvalidArgument,
         fmt::format("no table {} (choose 2, 3, 5 or 6)", which));
  }
}

PresetParams preset_table2() { return PresetParams{}; }

PresetParams preset_table3() {
  PresetParams p;
  p.C = -10.0;
  p.c_h = -0.01;
  p.branch = Branch::Pspin;
  return p;
}

const char *cs_mode_name(CsMode m) noexcept {
  switch (m) {
  case CsMode::Constant:
    return "constant";
  case CsMode::EqualMass:
    return "equal-mass";
  case CsMode::ZeroWithBinding:
    return "zero-with-binding";
  }
  return "?";
}

bool matches_three_figures(double computed, double golden) {
  if (!std::isfinite(computed) || golden == 0.0)
    return false;
  const double unit = std::pow(10.0, std::floor(std::log10(std::abs(golden))) - 2);
  return std::abs(computed - golden) <= 0.5 * unit;
}

//==============================================================================
TableReport compute_dirac_table(int which, const DiracTableOptions &opt) {
  if (which != 2 && which != 3)
    fail(ErrorCode::InvalidArgument, "Dirac tables are 2 and 3");
  const auto &g = golden_table(which);
  const auto pre = which == 2 ? preset_table2() : preset_table3();
  const auto sym = SymmetryConfig::make(pre.branch, pre.M, pre.C);
  const auto th = ThPotential::make(pre.D, pre.b_h, pre.r_e, pre.c_h);
  const PotentialForm forms[] = {PotentialForm::MorseII, PotentialForm::MorseI,
                                 PotentialForm::TietzHua};
  TableReport rep;
  rep.which = which;
  rep.title = g.title;
  rep.tolerance_rule = fmt::format("|delta| <= {:g} fm^-1", dirac_tolerance);
  rep.rows = parallel_rows(g.rows.size(), [&](std::size_t i) {
    const auto &gr = g.rows[i];
    TableRow row{gr.n, gr.kappa, gr.kappa_partner, gr.label, {}};
    const auto st = QuantumState::make(gr.n, gr.kappa);
    for (int c = 0; c < 3; ++c) {
      const Model m{th, sym, forms[c], opt.convention};
      TableCell cell;
      cell.column = g.columns[c];
      cell.golden = gr.values[c];
      cell.computed = primary_energy(m, st);
      cell.delta = cell.computed - cell.golden;
      cell.within = std::abs(cell.delta) <= dirac_tolerance;
      row.cells.push_back(cell);
    }
    return row;
  });
  rep.all_within = std::all_of(rep.rows.begin(), rep.rows.end(), [](auto &r) {
    return std::all_of(r.cells.begin(), r.cells.end(),
                       [](auto &c) { return c.within; });
  });
  rep.notes.push_back(fmt::format(
      "root convention: {}; r_e = {} fm, b_h = {} fm^-1, D = {} fm^-1, M = {} "
      "fm^-1, C = {} fm^-1",
      convention_name(opt.convention), pre.r_e, pre.b_h, pre.D, pre.M, pre.C));
  return rep;
}

//==============================================================================
Model molecular_model(const NaturalMolecule &mol, Branch branch,
                      const MolecularOptions &opt) {
  double C = 0.0;
  switch (opt.cs_mode) {
  case CsMode::Constant:
    C = opt.C;
    break;
  case CsMode::EqualMass:
    C = branch == Branch::Spin ? mol.M : -mol.M;
    break;
  case CsMode::ZeroWithBinding:
    C = 0.0;
    break;
  }
  return Model{mol.potential(), SymmetryConfig::make(branch, mol.M, C),
               PotentialForm::TietzHua, opt.convention};
}

double molecular_report_eV(const EnergyLevel &lvl, const MolecularOptions &opt,
                           const NaturalMolecule &, Branch) {
  const double hc = opt.constants.hbar_c_eV_A;
  return opt.cs_mode == CsMode::ZeroWithBinding ? lvl.offset * hc : lvl.E * hc;
}

TableReport compute_molecular_table(int which,
                                    const std::vector<MoleculeRecord> &registry,
                                    const MolecularOptions &opt) {
  if (which != 5 && which != 6)
    fail(ErrorCode::InvalidArgument, "molecular tables are 5 and 6");
  const auto &g = golden_table(which);
  const Branch branch = which == 5 ? Branch::Spin : Branch::Pspin;
  std::vector<NaturalMolecule> mols;
  for (int c = 0; c < g.column_count; ++c) {
    const auto rec = find_molecule(registry, g.columns[c]);
    if (!rec)
      fail(ErrorCode::Io,
           fmt::format("molecule {} missing from the registry", g.columns[c]));
    mols.push_back(to_natural_units(*rec, opt.constants));
  }
  TableReport rep;
  rep.which = which;
  rep.title = g.title;
  rep.tolerance_rule = "three significant figures";
  rep.rows = parallel_rows(g.rows.size(), [&](std::size_t i) {
    const auto &gr = g.rows[i];
    TableRow row{gr.n, gr.kappa, gr.kappa_partner, gr.label, {}};
    const auto st = QuantumState::make(gr.n, gr.kappa);
    for (int c = 0; c < g.column_count; ++c) {
      const Model m = molecular_model(mols[c], branch, opt);
      TableCell cell;
      cell.column = g.columns[c];
      cell.golden = gr.values[c];
      const auto levels = solve_levels(m, st);
      const auto *p = primary_level(levels);
      cell.computed =
          p ? molecular_report_eV(*p, opt, mols[c], branch) : nan_value;
      cell.delta = cell.computed - cell.golden;
      cell.within = matches_three_figures(cell.computed, cell.golden);
      row.cells.push_back(cell);
    }
    return row;
  });
  rep.all_within = std::all_of(rep.rows.begin(), rep.rows.end(), [](auto &r) {
    return std::all_of(r.cells.begin(), r.cells.end(),
                       [](auto &c) { return c.within; });
  });
  rep.notes.push_back(fmt::format(
      "cs-mode {}, wavenumber convention {}, root convention {}",
      cs_mode_name(opt.cs_mode),
      opt.constants.wavenumber == WavenumberConvention::TwoPi ? "2pi" : "plain",
      convention_name(opt.convention)));
  return rep;
}

//==============================================================================
CalibrationReport
calibrate_molecular_tables(const std::vector<MoleculeRecord> &registry) {
  CalibrationReport cal;
  for (auto cs : {CsMode::EqualMass, CsMode::ZeroWithBinding})
    for (auto wn : {WavenumberConvention::TwoPi, WavenumberConvention::Plain})
      for (auto conv : {Convention::Standard, Convention::Tabulated}) {
        MolecularOptions opt;
        opt.cs_mode = cs;
        opt.convention = conv;
        opt.constants.wavenumber = wn;
        CalibrationEntry e{opt};
        for (int which : {5, 6}) {
          const auto rep = compute_molecular_table(which, registry, opt);
          for (const auto &row : rep.rows)
            for (const auto &cell : row.cells) {
              ++e.cells_total;
              e.cells_matched += cell.within ? 1 : 0;
              if (!std::isfinite(cell.computed)) {
                ++e.cells_missing;
                continue;
              }
              e.worst_relative = std::max(e.worst_relative,
                                          std::abs(cell.delta / cell.golden));
            }
        }
        cal.entries.push_back(e);
      }
  std::stable_sort(cal.entries.begin(), cal.entries.end(),
                   [](const auto &a, const auto &b) {
                     if (a.cells_matched != b.cells_matched)
                       return a.cells_matched > b.cells_matched;
                     if (a.cells_missing != b.cells_missing)
                       return a.cells_missing < b.cells_missing;
                     return a.worst_relative < b.worst_relative;
                   });
  cal.reproduced = !cal.entries.empty() &&
                   cal.entries.front().cells_matched ==
                       cal.entries.front().cells_total;
  return cal;
}

std::vector<std::string> discrepancy_report(const CalibrationReport &cal) {
  std::vector<std::string> lines;
  lines.push_back(cal.reproduced
                      ? "calibration: a convention combination reproduces "
                        "the molecular tables to three significant figures"
                      : "calibration: no convention combination reproduces "
                        "the molecular tables to three significant figures");
  for (const auto &e : cal.entries)
    lines.push_back(fmt::format(
        "  cs-mode={:<17} wavenumber={:<5} roots={:<9} matched {}/{} cells, "
        "{} unsolved, worst relative deviation {:.3g}",
        cs_mode_name(e.options.cs_mode),
        e.options.constants.wavenumber == WavenumberConvention::TwoPi ? "2pi"
                                                                      : "plain",
        convention_name(e.options.convention), e.cells_matched, e.cells_total,
        e.cells_missing, e.worst_relative));
  return lines;
}

} // namespace thspec
