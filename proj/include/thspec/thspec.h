/* Stable C interface of the thspec shared library.
 *
 * Every fallible call returns a thspec_status; on failure the thread-local
 * message from thspec_last_error() explains it. Objects are opaque handles
 * released with their matching *_destroy function (NULL is accepted). */
#ifndef THSPEC_THSPEC_H
#define THSPEC_THSPEC_H

#include <stddef.h>

#if defined(THSPEC_BUILDING_LIBRARY)
#define THSPEC_API __attribute__((visibility("default")))
#else
#define THSPEC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/*============================================================================*/
typedef enum thspec_status {
  THSPEC_OK = 0,
  THSPEC_INVALID_ARGUMENT = 1,
  THSPEC_POLE_IN_DOMAIN = 2,
  THSPEC_NEGATIVE_RADICAND = 3,
  THSPEC_C3_ZERO = 4,
  THSPEC_INVALID_EXPONENT = 5,
  THSPEC_OUTSIDE_WINDOW = 6,
  THSPEC_NO_BOUND_STATE = 7,
  THSPEC_NOT_INTEGRABLE = 8,
  THSPEC_DEGENERATE_DENOMINATOR = 9,
  THSPEC_NO_ROOT = 10,
  THSPEC_GRID_TOO_COARSE = 11,
  THSPEC_IO = 12,
  THSPEC_INTERNAL = 99
} thspec_status;

typedef enum thspec_branch { THSPEC_SPIN = 0, THSPEC_PSPIN = 1 } thspec_branch;

typedef enum thspec_form {
  THSPEC_FORM_TIETZ_HUA = 0,
  THSPEC_FORM_MORSE_I = 1,
  THSPEC_FORM_MORSE_II = 2
} thspec_form;

typedef enum thspec_convention {
  THSPEC_CONVENTION_STANDARD = 0,
  THSPEC_CONVENTION_TABULATED = 1
} thspec_convention;

typedef enum thspec_centrifugal {
  THSPEC_CENTRIFUGAL_EXACT = 0,
  THSPEC_CENTRIFUGAL_PEKERIS = 1
} thspec_centrifugal;

typedef enum thspec_cs_mode {
  THSPEC_CS_CONSTANT = 0,
  THSPEC_CS_EQUAL_MASS = 1,
  THSPEC_CS_ZERO_WITH_BINDING = 2
} thspec_cs_mode;

typedef enum thspec_wavenumber {
  THSPEC_WAVENUMBER_TWO_PI = 0,
  THSPEC_WAVENUMBER_PLAIN = 1
} thspec_wavenumber;

THSPEC_API const char *thspec_version(void);
THSPEC_API const char *thspec_status_name(thspec_status status);
/* Message of the last failure on the calling thread ("" if none). */
THSPEC_API const char *thspec_last_error(void);

/*============================================================================*/
/* Potential D [(1 - s)/(1 - c_h s)]^2 with s = exp(-b_h (r - r_e)). */
typedef struct thspec_potential_params {
  double D;
  double b_h;
  double r_e;
  double c_h;
} thspec_potential_params;

typedef struct thspec_model_params {
  thspec_potential_params potential;
  thspec_branch branch;
  double M;
  double C; /* C_s for spin, C_ps for pspin */
  thspec_form form;
  thspec_convention convention;
} thspec_model_params;

THSPEC_API thspec_status thspec_potential_value(
    const thspec_potential_params *p, double r, double *out);
/* Pekeris coefficients D0, D1, D2 for alpha = b_h r_e. */
THSPEC_API thspec_status thspec_pekeris_coefficients(double alpha, double c_h,
                                                     double out[3]);

typedef struct thspec_model thspec_model;

THSPEC_API thspec_status thspec_model_create(const thspec_model_params *p,
                                             thspec_model **out);
THSPEC_API void thspec_model_destroy(thspec_model *m);
THSPEC_API thspec_status thspec_model_params_get(const thspec_model *m,
                                                 thspec_model_params *out);

/*============================================================================*/
typedef struct thspec_level {
  int n;
  int kappa;
  double E;
  double reference; /* +M (spin) or -M (pspin) */
  double offset;    /* E - reference at full precision */
  double residual;
  double residual_scale;
  double bracket_lo;
  double bracket_hi;
  int iterations;
} thspec_level;

/* Writes up to `capacity` levels; `count` receives the number found. */
THSPEC_API thspec_status thspec_solve_levels(const thspec_model *m, int n,
                                             int kappa, thspec_level *out,
                                             size_t capacity, size_t *count);
/* The reported level of a state; THSPEC_NO_BOUND_STATE when none exists. */
THSPEC_API thspec_status thspec_primary_level(const thspec_model *m, int n,
                                              int kappa, thspec_level *out);
THSPEC_API thspec_status thspec_residual(const thspec_model *m, int n,
                                         int kappa, double E, double *out);
/* Offset window [lo, hi] where both radicals are real. */
THSPEC_API thspec_status thspec_window(const thspec_model *m, int n, int kappa,
                                       double *lo, double *hi);
/* Spectroscopic label such as "0p_{3/2}"; returns the untruncated length. */
THSPEC_API size_t thspec_state_label(thspec_branch b, int n, int kappa,
                                     char *buf, size_t size);

/* Schrodinger limit with hbar = 1, level E measured from the well bottom. */
THSPEC_API thspec_status thspec_nonrel_level(const thspec_potential_params *p,
                                             double mu, int n, int l,
                                             double *E);

/*============================================================================*/
typedef struct thspec_oracle_options {
  size_t grid_n;  /* 0 selects the default */
  double r_min;   /* 0 selects the default */
  double r_max;   /* 0 selects the default */
  int richardson; /* nonzero: extrapolate over h, h/2, h/4 */
  thspec_centrifugal mode;
} thspec_oracle_options;

typedef struct thspec_oracle_result {
  double E;
  double offset;
  double raw_E;
  double self_consistency_residual;
  double richardson_change;
  size_t grid_n;
} thspec_oracle_result;

THSPEC_API void thspec_oracle_options_default(thspec_oracle_options *opt);
THSPEC_API thspec_status thspec_oracle_solve(const thspec_model *m, int n,
                                             int kappa,
                                             const thspec_oracle_options *opt,
                                             thspec_oracle_result *out);

/*============================================================================*/
typedef struct thspec_spinor thspec_spinor;

typedef struct thspec_spinor_info {
  thspec_level level;
  double exponent_s;      /* power of s */
  double exponent_1mcs;   /* power of (1 - c_h s) */
  double jacobi_a;
  double jacobi_b;
  double partner_denominator;
  double log_norm;
  int normalized;
  int nodes;
} thspec_spinor_info;

/* Builds the spinor of the reported level; normalizes when `normalize`. */
THSPEC_API thspec_status thspec_spinor_create(const thspec_model *m, int n,
                                              int kappa, int normalize,
                                              thspec_spinor **out);
THSPEC_API void thspec_spinor_destroy(thspec_spinor *s);
THSPEC_API thspec_status thspec_spinor_info_get(const thspec_spinor *s,
                                                thspec_spinor_info *out);
/* F and G at `count` radii; either output may be NULL. */
THSPEC_API thspec_status thspec_spinor_sample(const thspec_spinor *s,
                                              const double *r, size_t count,
                                              double *upper, double *lower);
THSPEC_API thspec_status thspec_spinor_derivative(const thspec_spinor *s,
                                                  double r, double *out);
THSPEC_API thspec_status thspec_spinor_density_integral(const thspec_spinor *s,
                                                        double *out);
THSPEC_API thspec_status thspec_spinor_nodes(const thspec_spinor *s,
                                             double *out, size_t capacity,
                                             size_t *count);

/*============================================================================*/
typedef struct thspec_registry thspec_registry;

typedef struct thspec_molecule {
  char name[32];
  double c_h;
  double mu_amu;
  double b_h_inv_angstrom;
  double r_e_angstrom;
  double D_wavenumber;
} thspec_molecule;

typedef struct thspec_molecular_options {
  thspec_cs_mode cs_mode;
  double C; /* inverse Angstrom, used by THSPEC_CS_CONSTANT */
  thspec_convention convention;
  thspec_wavenumber wavenumber;
} thspec_molecular_options;

/* THSPEC_REGISTRY, then the installed asset, then the compiled-in copy. */
THSPEC_API thspec_status thspec_registry_load_default(thspec_registry **out);
THSPEC_API thspec_status thspec_registry_load_file(const char *path,
                                                   thspec_registry **out);
THSPEC_API void thspec_registry_destroy(thspec_registry *r);
THSPEC_API size_t thspec_registry_size(const thspec_registry *r);
THSPEC_API const char *thspec_registry_origin(const thspec_registry *r);
THSPEC_API thspec_status thspec_registry_get(const thspec_registry *r,
                                             size_t index,
                                             thspec_molecule *out);

THSPEC_API void
thspec_molecular_options_default(thspec_molecular_options *opt);
/* Model of a registry molecule in inverse Angstrom; `hbar_c_eV_A` (may be
 * NULL) receives the factor converting its energies to eV. */
THSPEC_API thspec_status thspec_molecule_model(
    const thspec_registry *r, const char *name, thspec_branch branch,
    const thspec_molecular_options *opt, thspec_model_params *out,
    double *hbar_c_eV_A);
/* Reported molecular energy of a state in eV. */
THSPEC_API thspec_status thspec_molecule_level_eV(
    const thspec_registry *r, const char *name, thspec_branch branch,
    const thspec_molecular_options *opt, int n, int kappa,
    thspec_level *level, double *eV);

/*============================================================================*/
typedef struct thspec_table thspec_table;

typedef struct thspec_table_cell {
  double computed; /* NaN when no level was found */
  double golden;
  double delta;
  int within;
} thspec_table_cell;

typedef struct thspec_table_row {
  int n;
  int kappa;
  int kappa_partner; /* 0 when the table lists none */
  const char *label; /* valid while the table lives */
} thspec_table_row;

/* Parameter preset of Dirac tables 2 and 3. */
THSPEC_API thspec_status thspec_preset(int which, thspec_model_params *out);

/* Tables 2 and 3 use `convention`; tables 5 and 6 use `registry` and
 * `molecular` (NULL selects the defaults). */
THSPEC_API thspec_status thspec_table_compute(
    int which, thspec_convention convention, const thspec_registry *registry,
    const thspec_molecular_options *molecular, thspec_table **out);
THSPEC_API void thspec_table_destroy(thspec_table *t);
THSPEC_API const char *thspec_table_title(const thspec_table *t);
THSPEC_API const char *thspec_table_tolerance_rule(const thspec_table *t);
THSPEC_API size_t thspec_table_row_count(const thspec_table *t);
THSPEC_API size_t thspec_table_column_count(const thspec_table *t);
THSPEC_API const char *thspec_table_column_name(const thspec_table *t,
                                                size_t column);
THSPEC_API thspec_status thspec_table_row_get(const thspec_table *t, size_t row,
                                              thspec_table_row *out);
THSPEC_API thspec_status thspec_table_cell_get(const thspec_table *t,
                                               size_t row, size_t column,
                                               thspec_table_cell *out);
THSPEC_API int thspec_table_all_within(const thspec_table *t);
THSPEC_API size_t thspec_table_note_count(const thspec_table *t);
THSPEC_API const char *thspec_table_note(const thspec_table *t, size_t i);

/*============================================================================*/
typedef struct thspec_calibration thspec_calibration;

typedef struct thspec_calibration_entry {
  thspec_molecular_options options;
  double worst_relative;
  int cells_matched;
  int cells_missing;
  int cells_total;
} thspec_calibration_entry;

/* Scans the molecular convention flags against tables 5 and 6. */
THSPEC_API thspec_status thspec_calibrate(const thspec_registry *r,
                                          thspec_calibration **out);
THSPEC_API void thspec_calibration_destroy(thspec_calibration *c);
THSPEC_API int thspec_calibration_reproduced(const thspec_calibration *c);
THSPEC_API size_t thspec_calibration_size(const thspec_calibration *c);
THSPEC_API thspec_status thspec_calibration_entry_get(
    const thspec_calibration *c, size_t i, thspec_calibration_entry *out);
THSPEC_API size_t thspec_calibration_report_lines(const thspec_calibration *c);
THSPEC_API const char *thspec_calibration_report_line(
    const thspec_calibration *c, size_t i);

#ifdef __cplusplus
}
#endif

#endif /* THSPEC_THSPEC_H */
