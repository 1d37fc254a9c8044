#include "thspec/thspec.h"
#include "thspec/error.hpp"
#include "thspec/oracle.hpp"
#include "thspec/registry.hpp"
#include "thspec/tables.hpp"
#include "thspec/wavefunctions.hpp"
#include <cmath>
#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

using namespace thspec;

struct thspec_model {
  Model model;
};

struct thspec_spinor {
  SpinorSolution solution;
};

struct thspec_registry {
  std::vector<MoleculeRecord> records;
  std::string origin;
};

struct thspec_table {
  TableReport report;
  std::vector<std::string> columns;
};

struct thspec_calibration {
  CalibrationReport report;
  std::vector<std::string> lines;
};

namespace {

thread_local std::string last_error;

thspec_status to_status(ErrorCode c) noexcept {
  return static_cast<thspec_status>(static_cast<int>(c));
}

// Runs `f`, translating exceptions into status codes at the ABI boundary.
template <class F> thspec_status guarded(F &&f) noexcept {
  try {
    last_error.clear();
    f();
    return THSPEC_OK;
  } catch (const Error &e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc &) {
    last_error = "out of memory";
    return THSPEC_INTERNAL;
  } catch (const std::exception &e) {
    last_error = e.what();
    return THSPEC_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return THSPEC_INTERNAL;
  }
}

template <class T> void require(const T *p, const char *what) {
  if (!p)
    fail(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

ThPotential potential_of(const thspec_potential_params &p) {
  return ThPotential::make(p.D, p.b_h, p.r_e, p.c_h);
}

Branch branch_of(thspec_branch b) {
  switch (b) {
  case THSPEC_SPIN:
    return Branch::Spin;
  case THSPEC_PSPIN:
    return Branch::Pspin;
  }
  fail(ErrorCode::InvalidArgument, "unknown branch");
}

PotentialForm form_of(thspec_form f) {
  switch (f) {
  case THSPEC_FORM_TIETZ_HUA:
    return PotentialForm::TietzHua;
  case THSPEC_FORM_MORSE_I:
    return PotentialForm::MorseI;
  case THSPEC_FORM_MORSE_II:
    return PotentialForm::MorseII;
  }
  fail(ErrorCode::InvalidArgument, "unknown potential form");
}

Convention convention_of(thspec_convention c) {
  switch (c) {
  case THSPEC_CONVENTION_STANDARD:
    return Convention::Standard;
  case THSPEC_CONVENTION_TABULATED:
    return Convention::Tabulated;
  }
  fail(ErrorCode::InvalidArgument, "unknown root convention");
}

MolecularOptions molecular_of(const thspec_molecular_options *o) {
  MolecularOptions m;
  if (!o)
    return m;
  switch (o->cs_mode) {
  case THSPEC_CS_CONSTANT:
    m.cs_mode = CsMode::Constant;
    break;
  case THSPEC_CS_EQUAL_MASS:
    m.cs_mode = CsMode::EqualMass;
    break;
  case THSPEC_CS_ZERO_WITH_BINDING:
    m.cs_mode = CsMode::ZeroWithBinding;
    break;
  default:
    fail(ErrorCode::InvalidArgument, "unknown cs mode");
  }
  m.C = o->C;
  m.convention = convention_of(o->convention);
  switch (o->wavenumber) {
  case THSPEC_WAVENUMBER_TWO_PI:
    m.constants.wavenumber = WavenumberConvention::TwoPi;
    break;
  case THSPEC_WAVENUMBER_PLAIN:
    m.constants.wavenumber = WavenumberConvention::Plain;
    break;
  default:
    fail(ErrorCode::InvalidArgument, "unknown wavenumber convention");
  }
  return m;
}

thspec_molecular_options molecular_to_c(const MolecularOptions &m) {
  thspec_molecular_options o{};
  o.cs_mode = m.cs_mode == CsMode::Constant    ? THSPEC_CS_CONSTANT
              : m.cs_mode == CsMode::EqualMass ? THSPEC_CS_EQUAL_MASS
                                               : THSPEC_CS_ZERO_WITH_BINDING;
  o.C = m.C;
  o.convention = m.convention == Convention::Standard
                     ? THSPEC_CONVENTION_STANDARD
                     : THSPEC_CONVENTION_TABULATED;
  o.wavenumber = m.constants.wavenumber == WavenumberConvention::TwoPi
                     ? THSPEC_WAVENUMBER_TWO_PI
                     : THSPEC_WAVENUMBER_PLAIN;
  return o;
}

Model model_of(const thspec_model_params &p) {
  return Model{potential_of(p.potential),
               SymmetryConfig::make(branch_of(p.branch), p.M, p.C),
               form_of(p.form), convention_of(p.convention)};
}

thspec_model_params params_of(const Model &m) {
  thspec_model_params p{};
  p.potential = {m.pot.D(), m.pot.b_h(), m.pot.r_e(), m.pot.c_h()};
  p.branch = m.sym.branch == Branch::Spin ? THSPEC_SPIN : THSPEC_PSPIN;
  p.M = m.sym.M;
  p.C = m.sym.C;
  p.form = m.form == PotentialForm::TietzHua ? THSPEC_FORM_TIETZ_HUA
           : m.form == PotentialForm::MorseI ? THSPEC_FORM_MORSE_I
                                             : THSPEC_FORM_MORSE_II;
  p.convention = m.convention == Convention::Standard
                     ? THSPEC_CONVENTION_STANDARD
                     : THSPEC_CONVENTION_TABULATED;
  return p;
}

thspec_level level_to_c(const EnergyLevel &l) {
  thspec_level o{};
  o.n = l.state.n();
  o.kappa = l.state.kappa();
  o.E = l.E;
  o.reference = l.reference;
  o.offset = l.offset;
  o.residual = l.residual;
  o.residual_scale = l.residual_scale;
  o.bracket_lo = l.bracket_lo;
  o.bracket_hi = l.bracket_hi;
  o.iterations = l.iterations;
  return o;
}

EnergyLevel primary_or_fail(const Model &m, const QuantumState &st) {
  const auto levels = solve_levels(m, st);
  const auto *p = primary_level(levels);
  if (!p)
    fail(ErrorCode::NoBoundState,
         "no bound state for " + st.label(m.sym.branch) + " (n = " +
             std::to_string(st.n()) + ", kappa = " +
             std::to_string(st.kappa()) + ")");
  return *p;
}

NaturalMolecule molecule_of(const thspec_registry *r, const char *name,
                            const MolecularOptions &opt) {
  require(r, "registry");
  require(name, "molecule name");
  const auto rec = find_molecule(r->records, name);
  if (!rec)
    fail(ErrorCode::InvalidArgument,
         std::string("unknown molecule '") + name + "'");
  return to_natural_units(*rec, opt.constants);
}

} // namespace

//==============================================================================
extern "C" {

const char *thspec_version(void) { return THSPEC_VERSION_STRING; }

const char *thspec_status_name(thspec_status status) {
  switch (status) {
  case THSPEC_OK:
    return "ok";
  case THSPEC_INTERNAL:
    return "internal";
  default:
    if (status >= THSPEC_INVALID_ARGUMENT && status <= THSPEC_IO)
      return error_code_name(static_cast<ErrorCode>(status));
    return "unknown";
  }
}

const char *thspec_last_error(void) { return last_error.c_str(); }

thspec_status thspec_potential_value(const thspec_potential_params *p, double r,
                                     double *out) {
  return guarded([&] {
    require(p, "params");
    require(out, "out");
    *out = th_potential_value(potential_of(*p), r);
  });
}

thspec_status thspec_pekeris_coefficients(double alpha, double c_h,
                                          double out[3]) {
  return guarded([&] {
    require(out, "out");
    const auto k = pekeris_coefficients(alpha, c_h);
    out[0] = k.D0;
    out[1] = k.D1;
    out[2] = k.D2;
  });
}

thspec_status thspec_model_create(const thspec_model_params *p,
                                  thspec_model **out) {
  return guarded([&] {
    require(p, "params");
    require(out, "out");
    *out = new thspec_model{model_of(*p)};
  });
}

void thspec_model_destroy(thspec_model *m) { delete m; }

thspec_status thspec_model_params_get(const thspec_model *m,
                                      thspec_model_params *out) {
  return guarded([&] {
    require(m, "model");
    require(out, "out");
    *out = params_of(m->model);
  });
}

//==============================================================================
thspec_status thspec_solve_levels(const thspec_model *m, int n, int kappa,
                                  thspec_level *out, size_t capacity,
                                  size_t *count) {
  return guarded([&] {
    require(m, "model");
    require(count, "count");
    if (capacity > 0)
      require(out, "out");
    const auto levels = solve_levels(m->model, QuantumState::make(n, kappa));
    *count = levels.size();
    for (size_t i = 0; i < levels.size() && i < capacity; ++i)
      out[i] = level_to_c(levels[i]);
  });
}

thspec_status thspec_primary_level(const thspec_model *m, int n, int kappa,
                                   thspec_level *out) {
  return guarded([&] {
    require(m, "model");
    require(out, "out");
    *out = level_to_c(primary_or_fail(m->model, QuantumState::make(n, kappa)));
  });
}

thspec_status thspec_residual(const thspec_model *m, int n, int kappa, double E,
                              double *out) {
  return guarded([&] {
    require(m, "model");
    require(out, "out");
    *out = residual(m->model, QuantumState::make(n, kappa), E);
  });
}

thspec_status thspec_window(const thspec_model *m, int n, int kappa, double *lo,
                            double *hi) {
  return guarded([&] {
    require(m, "model");
    require(lo, "lo");
    require(hi, "hi");
    const auto w = physical_window(m->model, QuantumState::make(n, kappa));
    *lo = w.lo;
    *hi = w.hi;
  });
}

size_t thspec_state_label(thspec_branch b, int n, int kappa, char *buf,
                          size_t size) {
  std::string label;
  if (guarded([&] {
        label = QuantumState::make(n, kappa).label(branch_of(b));
      }) != THSPEC_OK)
    label.clear();
  if (buf && size > 0) {
    const size_t k = std::min(size - 1, label.size());
    std::memcpy(buf, label.data(), k);
    buf[k] = '\0';
  }
  return label.size();
}

thspec_status thspec_nonrel_level(const thspec_potential_params *p, double mu,
                                  int n, int l, double *E) {
  return guarded([&] {
    require(p, "params");
    require(E, "E");
    const auto levels = solve_nonrel(mu, potential_of(*p), n, l);
    if (levels.empty())
      fail(ErrorCode::NoBoundState, "no nonrelativistic bound state");
    *E = levels.front().E;
  });
}

//==============================================================================
void thspec_oracle_options_default(thspec_oracle_options *opt) {
  if (!opt)
    return;
  const OracleOptions d;
  *opt = thspec_oracle_options{};
  opt->grid_n = d.grid.N;
  opt->richardson = d.richardson ? 1 : 0;
  opt->mode = THSPEC_CENTRIFUGAL_PEKERIS;
}

thspec_status thspec_oracle_solve(const thspec_model *m, int n, int kappa,
                                  const thspec_oracle_options *opt,
                                  thspec_oracle_result *out) {
  return guarded([&] {
    require(m, "model");
    require(out, "out");
    thspec_oracle_options o;
    thspec_oracle_options_default(&o);
    if (opt)
      o = *opt;
    OracleOptions oo;
    const auto def = default_grid(m->model.pot, o.grid_n ? o.grid_n : 6000);
    oo.grid = FdGrid::make(o.r_min > 0.0 ? o.r_min : def.r_min,
                           o.r_max > 0.0 ? o.r_max : def.r_max, def.N);
    oo.richardson = o.richardson != 0;
    const auto mode = o.mode == THSPEC_CENTRIFUGAL_EXACT
                          ? CentrifugalMode::Exact
                          : CentrifugalMode::Pekeris;
    const auto r = solve_self_consistent(m->model,
                                         QuantumState::make(n, kappa), mode, oo);
    *out = thspec_oracle_result{r.E,
                                r.offset,
                                r.raw_E,
                                r.self_consistency_residual,
                                r.richardson_change,
                                r.grid.N};
  });
}

//==============================================================================
thspec_status thspec_spinor_create(const thspec_model *m, int n, int kappa,
                                   int normalize_it, thspec_spinor **out) {
  return guarded([&] {
    require(m, "model");
    require(out, "out");
    const auto level = primary_or_fail(m->model, QuantumState::make(n, kappa));
    auto sol = make_spinor(m->model, level);
    if (normalize_it)
      sol = normalize(sol);
    *out = new thspec_spinor{std::move(sol)};
  });
}

void thspec_spinor_destroy(thspec_spinor *s) { delete s; }

thspec_status thspec_spinor_info_get(const thspec_spinor *s,
                                     thspec_spinor_info *out) {
  return guarded([&] {
    require(s, "spinor");
    require(out, "out");
    const auto &sol = s->solution;
    thspec_spinor_info i{};
    i.level = level_to_c(sol.level);
    i.exponent_s = sol.params.exponent_s;
    i.exponent_1mcs = sol.params.exponent_1mc3s;
    i.jacobi_a = sol.params.jacobi_a;
    i.jacobi_b = sol.params.jacobi_b;
    i.partner_denominator = sol.partner_denominator;
    i.log_norm = sol.log_norm;
    i.normalized = sol.normalized ? 1 : 0;
    i.nodes = node_count(sol);
    *out = i;
  });
}

thspec_status thspec_spinor_sample(const thspec_spinor *s, const double *r,
                                   size_t count, double *upper, double *lower) {
  return guarded([&] {
    require(s, "spinor");
    if (count == 0)
      return;
    require(r, "r");
    std::vector<SpinorSample> buf(count);
    sample_spinor(s->solution, std::span<const double>(r, count), buf);
    for (size_t i = 0; i < count; ++i) {
      if (upper)
        upper[i] = buf[i].upper;
      if (lower)
        lower[i] = buf[i].lower;
    }
  });
}

thspec_status thspec_spinor_derivative(const thspec_spinor *s, double r,
                                       double *out) {
  return guarded([&] {
    require(s, "spinor");
    require(out, "out");
    *out = primary_derivative(s->solution, r);
  });
}

thspec_status thspec_spinor_density_integral(const thspec_spinor *s,
                                             double *out) {
  return guarded([&] {
    require(s, "spinor");
    require(out, "out");
    *out = density_integral(s->solution);
  });
}

thspec_status thspec_spinor_nodes(const thspec_spinor *s, double *out,
                                  size_t capacity, size_t *count) {
  return guarded([&] {
    require(s, "spinor");
    require(count, "count");
    if (capacity > 0)
      require(out, "out");
    const auto nodes = node_positions(s->solution);
    *count = nodes.size();
    for (size_t i = 0; i < nodes.size() && i < capacity; ++i)
      out[i] = nodes[i];
  });
}

//==============================================================================
thspec_status thspec_registry_load_default(thspec_registry **out) {
  return guarded([&] {
    require(out, "out");
    auto r = std::make_unique<thspec_registry>();
    r->records = load_default_registry(&r->origin);
    *out = r.release();
  });
}

thspec_status thspec_registry_load_file(const char *path,
                                        thspec_registry **out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    auto r = std::make_unique<thspec_registry>();
    r->records = load_registry_file(path);
    r->origin = path;
    *out = r.release();
  });
}

void thspec_registry_destroy(thspec_registry *r) { delete r; }

size_t thspec_registry_size(const thspec_registry *r) {
  return r ? r->records.size() : 0;
}

const char *thspec_registry_origin(const thspec_registry *r) {
  return r ? r->origin.c_str() : "";
}

thspec_status thspec_registry_get(const thspec_registry *r, size_t index,
                                  thspec_molecule *out) {
  return guarded([&] {
    require(r, "registry");
    require(out, "out");
    if (index >= r->records.size())
      fail(ErrorCode::InvalidArgument, "registry index out of range");
    const auto &rec = r->records[index];
    thspec_molecule m{};
    std::strncpy(m.name, rec.name.c_str(), sizeof m.name - 1);
    m.c_h = rec.c_h;
    m.mu_amu = rec.mu_amu;
    m.b_h_inv_angstrom = rec.b_h_inv_A;
    m.r_e_angstrom = rec.r_e_A;
    m.D_wavenumber = rec.D_wavenumber;
    *out = m;
  });
}

void thspec_molecular_options_default(thspec_molecular_options *opt) {
  if (opt)
    *opt = molecular_to_c(MolecularOptions{});
}

thspec_status thspec_molecule_model(const thspec_registry *r, const char *name,
                                    thspec_branch branch,
                                    const thspec_molecular_options *opt,
                                    thspec_model_params *out,
                                    double *hbar_c_eV_A) {
  return guarded([&] {
    require(out, "out");
    const auto mo = molecular_of(opt);
    const auto mol = molecule_of(r, name, mo);
    *out = params_of(molecular_model(mol, branch_of(branch), mo));
    if (hbar_c_eV_A)
      *hbar_c_eV_A = mo.constants.hbar_c_eV_A;
  });
}

thspec_status thspec_molecule_level_eV(const thspec_registry *r,
                                       const char *name, thspec_branch branch,
                                       const thspec_molecular_options *opt,
                                       int n, int kappa, thspec_level *level,
                                       double *eV) {
  return guarded([&] {
    require(eV, "eV");
    const auto mo = molecular_of(opt);
    const auto mol = molecule_of(r, name, mo);
    const auto b = branch_of(branch);
    const auto lvl =
        primary_or_fail(molecular_model(mol, b, mo), QuantumState::make(n, kappa));
    if (level)
      *level = level_to_c(lvl);
    *eV = molecular_report_eV(lvl, mo, mol, b);
  });
}

//==============================================================================
thspec_status thspec_preset(int which, thspec_model_params *out) {
  return guarded([&] {
    require(out, "out");
    if (which != 2 && which != 3)
      fail(ErrorCode::InvalidArgument, "presets exist for tables 2 and 3");
    const auto p = which == 2 ? preset_table2() : preset_table3();
    thspec_model_params m{};
    m.potential = {p.D, p.b_h, p.r_e, p.c_h};
    m.branch = p.branch == Branch::Spin ? THSPEC_SPIN : THSPEC_PSPIN;
    m.M = p.M;
    m.C = p.C;
    m.form = THSPEC_FORM_TIETZ_HUA;
    m.convention = THSPEC_CONVENTION_TABULATED;
    *out = m;
  });
}

thspec_status thspec_table_compute(int which, thspec_convention convention,
                                   const thspec_registry *registry,
                                   const thspec_molecular_options *molecular,
                                   thspec_table **out) {
  return guarded([&] {
    require(out, "out");
    auto t = std::make_unique<thspec_table>();
    if (which == 2 || which == 3) {
      t->report = compute_dirac_table(which, {convention_of(convention)});
    } else if (which == 5 || which == 6) {
      require(registry, "registry");
      t->report = compute_molecular_table(which, registry->records,
                                          molecular_of(molecular));
    } else {
      fail(ErrorCode::InvalidArgument, "tables are 2, 3, 5 and 6");
    }
    const auto &g = golden_table(which);
    for (int c = 0; c < g.column_count; ++c)
      t->columns.emplace_back(g.columns[c]);
    *out = t.release();
  });
}

void thspec_table_destroy(thspec_table *t) { delete t; }

const char *thspec_table_title(const thspec_table *t) {
  return t ? t->report.title.c_str() : "";
}

const char *thspec_table_tolerance_rule(const thspec_table *t) {
  return t ? t->report.tolerance_rule.c_str() : "";
}

size_t thspec_table_row_count(const thspec_table *t) {
  return t ? t->report.rows.size() : 0;
}

size_t thspec_table_column_count(const thspec_table *t) {
  return t ? t->columns.size() : 0;
}

const char *thspec_table_column_name(const thspec_table *t, size_t column) {
  return t && column < t->columns.size() ? t->columns[column].c_str() : "";
}

thspec_status thspec_table_row_get(const thspec_table *t, size_t row,
                                   thspec_table_row *out) {
  return guarded([&] {
    require(t, "table");
    require(out, "out");
    if (row >= t->report.rows.size())
      fail(ErrorCode::InvalidArgument, "row out of range");
    const auto &r = t->report.rows[row];
    *out = thspec_table_row{r.n, r.kappa, r.kappa_partner, r.label.c_str()};
  });
}

thspec_status thspec_table_cell_get(const thspec_table *t, size_t row,
                                    size_t column, thspec_table_cell *out) {
  return guarded([&] {
    require(t, "table");
    require(out, "out");
    if (row >= t->report.rows.size() ||
        column >= t->report.rows[row].cells.size())
      fail(ErrorCode::InvalidArgument, "cell out of range");
    const auto &c = t->report.rows[row].cells[column];
    *out = thspec_table_cell{c.computed, c.golden, c.delta, c.within ? 1 : 0};
  });
}

int thspec_table_all_within(const thspec_table *t) {
  return t && t->report.all_within ? 1 : 0;
}

size_t thspec_table_note_count(const thspec_table *t) {
  return t ? t->report.notes.size() : 0;
}

const char *thspec_table_note(const thspec_table *t, size_t i) {
  return t && i < t->report.notes.size() ? t->report.notes[i].c_str() : "";
}

//==============================================================================
thspec_status thspec_calibrate(const thspec_registry *r,
                               thspec_calibration **out) {
  return guarded([&] {
    require(r, "registry");
    require(out, "out");
    auto c = std::make_unique<thspec_calibration>();
    c->report = calibrate_molecular_tables(r->records);
    c->lines = discrepancy_report(c->report);
    *out = c.release();
  });
}

void thspec_calibration_destroy(thspec_calibration *c) { delete c; }

int thspec_calibration_reproduced(const thspec_calibration *c) {
  return c && c->report.reproduced ? 1 : 0;
}

size_t thspec_calibration_size(const thspec_calibration *c) {
  return c ? c->report.entries.size() : 0;
}

thspec_status thspec_calibration_entry_get(const thspec_calibration *c,
                                           size_t i,
                                           thspec_calibration_entry *out) {
  return guarded([&] {
    require(c, "calibration");
    require(out, "out");
    if (i >= c->report.entries.size())
      fail(ErrorCode::InvalidArgument, "entry out of range");
    const auto &e = c->report.entries[i];
    *out = thspec_calibration_entry{molecular_to_c(e.options), e.worst_relative,
                                    e.cells_matched, e.cells_missing,
                                    e.cells_total};
  });
}

size_t thspec_calibration_report_lines(const thspec_calibration *c) {
  return c ? c->lines.size() : 0;
}

const char *thspec_calibration_report_line(const thspec_calibration *c,
                                           size_t i) {
  return c && i < c->lines.size() ? c->lines[i].c_str() : "";
}

} // extern "C"
