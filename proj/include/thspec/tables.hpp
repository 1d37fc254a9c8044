#pragma once

#include "thspec/core_types.hpp"
#include "thspec/spectra.hpp"
#include <array>
#include <span>
#include <string>
#include <vector>

namespace thspec {

//==============================================================================
// Published reference values, embedded as data.
struct GoldenRow {
  int n;
  int kappa;         // kappa < 0 member of the doublet
  int kappa_partner; // kappa > 0 member (0 when the table lists none)
  const char *label;
  std::array<double, 3> values; // unused trailing entries are NaN
};

struct GoldenTable {
  int which;
  const char *title;
  std::array<const char *, 3> columns;
  int column_count;
  std::span<const GoldenRow> rows;
};

const GoldenTable &golden_table(int which); // 2, 3, 5 or 6

//==============================================================================
// Parameter set of the Dirac model tables (fm units).
struct PresetParams {
  double r_e = 2.40873;
  double b_h = 0.988879;
  double D = 5.0;
  double M = 10.0;
  double C = 10.0;
  double c_h = 0.01;
  Branch branch = Branch::Spin;
};

PresetParams preset_table2();
PresetParams preset_table3();

// How the symmetry constant is chosen for the molecular tables.
//   Constant:        C taken as given.
//   EqualMass:       C_s = M (C_ps = -M), energies reported as E.
//   ZeroWithBinding: C = 0, energies reported as E - M (E + M for pspin).
enum class CsMode { Constant, EqualMass, ZeroWithBinding };
const char *cs_mode_name(CsMode m) noexcept;

// Defaults: no flag combination reproduces the published molecular tables, so
// the defaults are the physically consistent choice, whose spin levels tend
// to the Schrodinger spectrum of the same potential.
struct MolecularOptions {
  CsMode cs_mode = CsMode::ZeroWithBinding;
  double C = 0.0; // used by CsMode::Constant, in inverse Angstrom
  Convention convention = Convention::Standard;
  PhysicalConstants constants;
};

// Energy a molecular table reports for a level, in eV.
double molecular_report_eV(const EnergyLevel &lvl, const MolecularOptions &opt,
                           const NaturalMolecule &mol, Branch branch);
Model molecular_model(const NaturalMolecule &mol, Branch branch,
                      const MolecularOptions &opt);

//==============================================================================
struct TableCell {
  std::string column;
  double computed = 0.0; // NaN when no level was found
  double golden = 0.0;
  double delta = 0.0;    // computed - golden
  bool within = false;   // within the table's tolerance
};

struct TableRow {
  int n = 0;
  int kappa = 0;
  int kappa_partner = 0;
  std::string label;
  std::vector<TableCell> cells;
};

struct TableReport {
  int which = 0;
  std::string title;
  std::vector<TableRow> rows;
  std::string tolerance_rule;
  bool all_within = false;
  std::vector<std::string> notes;
};

struct DiracTableOptions {
  Convention convention = Convention::Tabulated;
};

TableReport compute_dirac_table(int which, const DiracTableOptions &opt = {});
TableReport compute_molecular_table(int which,
                                    const std::vector<MoleculeRecord> &registry,
                                    const MolecularOptions &opt);

// |computed - golden| within half a unit of the third significant figure.
bool matches_three_figures(double computed, double golden);

//==============================================================================
struct CalibrationEntry {
  MolecularOptions options;
  double worst_relative = 0.0; // max |delta / golden| over solved cells
  int cells_matched = 0;
  int cells_missing = 0; // no level found
  int cells_total = 0;
};

struct CalibrationReport {
  std::vector<CalibrationEntry> entries; // best first
  bool reproduced = false;
};

// Scans cs-mode x wavenumber convention x root convention over both molecular tables.
CalibrationReport calibrate_molecular_tables(
    const std::vector<MoleculeRecord> &registry);

std::vector<std::string> discrepancy_report(const CalibrationReport &cal);

} // namespace thspec
