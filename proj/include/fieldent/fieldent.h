/*
 * fieldent C API.
 *
 * All entry points are exported with C linkage from libfieldent. Objects are
 * returned as opaque handles that must be released with the matching *_free
 * call. Functions report success through fe_status; on failure a
 * null-terminated diagnostic is written into the caller-provided message
 * buffer (when one is given).
 */
#ifndef FIELDENT_FIELDENT_H
#define FIELDENT_FIELDENT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FE_API __declspec(dllexport)
#else
#define FE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fe_status {
  FE_OK = 0,
  FE_ERR_INVALID = 1,      /* null handle / bad argument */
  FE_ERR_DOMAIN = 3,       /* parameter outside the admissible region */
  FE_ERR_PRECISION = 4,    /* statistical precision target missed */
  FE_ERR_INTEGRATION = 5,  /* quadrature failed or integral diverges */
  FE_ERR_INTERNAL = 6
} fe_status;

typedef struct fe_model fe_model;
typedef struct fe_result fe_result;

FE_API const char* fe_version(void);

/* ---- model ---------------------------------------------------------- */

FE_API fe_model* fe_model_unbroken(int n_fields, double coupling, double mass,
                                   double cutoff, char* errmsg,
                                   size_t errmsg_len);
FE_API fe_model* fe_model_broken(int n_fields, double coupling, double mu,
                                 double cutoff, char* errmsg,
                                 size_t errmsg_len);
FE_API void fe_model_free(fe_model* model);

FE_API fe_status fe_ssb_shift_scale(double lambda_u, int n_fields,
                                    double cutoff, double c_t, double* out,
                                    char* errmsg, size_t errmsg_len);
FE_API fe_status fe_effective_masses(double coupling, double shift_scale,
                                     double* m_sigma, double* m_pi,
                                     char* errmsg, size_t errmsg_len);

/* ---- propagators ---------------------------------------------------- */

FE_API fe_status fe_momentum_propagator(double k_squared, double mass,
                                        double* out, char* errmsg,
                                        size_t errmsg_len);
FE_API fe_status fe_position_propagator(double separation, double mass,
                                        double* out, char* errmsg,
                                        size_t errmsg_len);
FE_API fe_status fe_pv_position_propagator(double separation,
                                           double physical_mass,
                                           double regulator_mass, double* out,
                                           char* errmsg, size_t errmsg_len);

/* ---- replica entropies ---------------------------------------------- */

/* Cross half-space integral of a product of PV-regulated lines per unit
 * 3-volume; masses[i] < regulators[i] required. */
FE_API fe_status fe_discordant_integral(const double* masses,
                                        const double* regulators,
                                        size_t n_lines, double rel_tol,
                                        double* value, double* error,
                                        char* errmsg, size_t errmsg_len);

FE_API fe_status fe_renyi_cubic(int alpha, double coupling, double vev,
                                double mass, double cutoff, double rel_tol,
                                fe_result** out, char* errmsg,
                                size_t errmsg_len);
FE_API fe_status fe_renyi_unbroken(const fe_model* model, int alpha,
                                   double rel_tol, fe_result** out,
                                   char* errmsg, size_t errmsg_len);
FE_API fe_status fe_renyi_ssb(const fe_model* model, int alpha,
                              double lambda_u, double c_t, double rel_tol,
                              fe_result** out, char* errmsg,
                              size_t errmsg_len);
FE_API fe_status fe_renyi_ssb_pi(const fe_model* model, int alpha,
                                 double lambda_u, double c_t, double rel_tol,
                                 fe_result** out, char* errmsg,
                                 size_t errmsg_len);

/* Momentum-space Monte Carlo cross-check of the unbroken diagram. */
FE_API fe_status fe_xcheck_momentum(const fe_model* model, int alpha,
                                    long long samples, uint64_t seed,
                                    int threads, double target_rel,
                                    fe_result** out, char* errmsg,
                                    size_t errmsg_len);

FE_API fe_status fe_fit_power_law(const double* x, const double* y, size_t n,
                                  double* prefactor, double* exponent,
                                  double* residual, char* errmsg,
                                  size_t errmsg_len);

/* Fraction of the radial diagram integral beyond separation `range`. */
FE_API fe_status fe_short_range_fraction(const double* masses,
                                         const double* regulators,
                                         size_t n_lines, double range,
                                         double* out, char* errmsg,
                                         size_t errmsg_len);

/* ---- result handle --------------------------------------------------- */

FE_API double fe_result_value(const fe_result* result);
FE_API double fe_result_error(const fe_result* result);
FE_API int fe_result_alpha(const fe_result* result);
FE_API double fe_result_cutoff(const fe_result* result);
FE_API uint64_t fe_result_seed(const fe_result* result);
FE_API long long fe_result_samples(const fe_result* result);
FE_API size_t fe_result_contribution_count(const fe_result* result);
/* `label` points into the result and stays valid until fe_result_free. */
FE_API fe_status fe_result_contribution(const fe_result* result, size_t index,
                                        const char** label, double* value,
                                        double* error);
FE_API void fe_result_free(fe_result* result);

/* ---- Gaussian lattice oracle ----------------------------------------- */

FE_API fe_status fe_oracle_entropy(int dims, int sites_per_dim,
                                   double mass_phi, double mass_chi, double g,
                                   int alpha, double* out, char* errmsg,
                                   size_t errmsg_len);

typedef struct fe_oracle_report {
  double coupling_exponent;
  double exponent_residual;
  double s3_over_s2;
  double volume_law_gap;
  double per_site_entropy_l;
  double per_site_entropy_2l;
  double per_site_entropy_4l;
} fe_oracle_report;

FE_API fe_status fe_oracle_check(int dims, int sites_per_dim, double mass_phi,
                                 double mass_chi, const double* couplings,
                                 size_t n_couplings, int alpha,
                                 fe_oracle_report* out, char* errmsg,
                                 size_t errmsg_len);

#ifdef __cplusplus
}
#endif

#endif /* FIELDENT_FIELDENT_H */
