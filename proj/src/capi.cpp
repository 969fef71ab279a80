#include "fieldent/fieldent.h"

#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "fieldent/errors.hpp"
#include "fieldent/model.hpp"
#include "fieldent/oracle.hpp"
#include "fieldent/propagators.hpp"
#include "fieldent/quad.hpp"
#include "fieldent/replica.hpp"
#include "fieldent/version.hpp"

using fieldent::DivergenceError;
using fieldent::DomainError;
using fieldent::IntegrationError;
using fieldent::PrecisionError;

struct fe_model {
  fieldent::model::FieldTheory theory;
};

struct fe_result {
  fieldent::replica::EntropyResult result;
};

namespace {

void write_message(char* errmsg, size_t errmsg_len, const char* text) {
  if (errmsg == nullptr || errmsg_len == 0) return;
  std::strncpy(errmsg, text, errmsg_len - 1);
  errmsg[errmsg_len - 1] = '\0';
}

fe_status status_of(std::exception_ptr eptr, char* errmsg, size_t errmsg_len) {
  try {
    std::rethrow_exception(eptr);
  } catch (const DomainError& e) {
    write_message(errmsg, errmsg_len, e.what());
    return FE_ERR_DOMAIN;
  } catch (const PrecisionError& e) {
    write_message(errmsg, errmsg_len, e.what());
    return FE_ERR_PRECISION;
  } catch (const IntegrationError& e) {
    write_message(errmsg, errmsg_len, e.what());
    return FE_ERR_INTEGRATION;
  } catch (const std::exception& e) {
    write_message(errmsg, errmsg_len, e.what());
    return FE_ERR_INTERNAL;
  } catch (...) {
    write_message(errmsg, errmsg_len, "unknown error");
    return FE_ERR_INTERNAL;
  }
}

template <class Fn>
fe_status guarded(char* errmsg, size_t errmsg_len, Fn&& fn) {
  try {
    fn();
    return FE_OK;
  } catch (...) {
    return status_of(std::current_exception(), errmsg, errmsg_len);
  }
}

fe_status require(bool ok, const char* what, char* errmsg, size_t errmsg_len) {
  if (ok) return FE_OK;
  write_message(errmsg, errmsg_len, what);
  return FE_ERR_INVALID;
}

std::vector<fieldent::prop::RegulatedPropagator> make_lines(
    const double* masses, const double* regulators, size_t n_lines) {
  std::vector<fieldent::prop::RegulatedPropagator> lines;
  lines.reserve(n_lines);
  for (size_t i = 0; i < n_lines; ++i)
    lines.emplace_back(masses[i], regulators[i]);
  return lines;
}

fe_result* wrap(fieldent::replica::EntropyResult r) {
  return new fe_result{std::move(r)};
}

}  // namespace

extern "C" {

const char* fe_version(void) { return fieldent::kVersion; }

fe_model* fe_model_unbroken(int n_fields, double coupling, double mass,
                            double cutoff, char* errmsg, size_t errmsg_len) {
  fe_model* out = nullptr;
  guarded(errmsg, errmsg_len, [&] {
    out = new fe_model{fieldent::model::FieldTheory::unbroken(
        n_fields, coupling, mass, cutoff)};
  });
  return out;
}

fe_model* fe_model_broken(int n_fields, double coupling, double mu,
                          double cutoff, char* errmsg, size_t errmsg_len) {
  fe_model* out = nullptr;
  guarded(errmsg, errmsg_len, [&] {
    out = new fe_model{
        fieldent::model::FieldTheory::broken(n_fields, coupling, mu, cutoff)};
  });
  return out;
}

void fe_model_free(fe_model* model) { delete model; }

fe_status fe_ssb_shift_scale(double lambda_u, int n_fields, double cutoff,
                             double c_t, double* out, char* errmsg,
                             size_t errmsg_len) {
  if (fe_status s = require(out != nullptr, "null output pointer", errmsg,
                            errmsg_len))
    return s;
  return guarded(errmsg, errmsg_len, [&] {
    *out = fieldent::model::ssb_shift_scale(lambda_u, n_fields, cutoff, c_t);
  });
}

fe_status fe_effective_masses(double coupling, double shift_scale,
                              double* m_sigma, double* m_pi, char* errmsg,
                              size_t errmsg_len) {
  if (fe_status s = require(m_sigma != nullptr && m_pi != nullptr,
                            "null output pointer", errmsg, errmsg_len))
    return s;
  return guarded(errmsg, errmsg_len, [&] {
    auto [s_eff, p_eff] =
        fieldent::model::effective_masses(coupling, shift_scale);
    *m_sigma = s_eff;
    *m_pi = p_eff;
  });
}

fe_status fe_momentum_propagator(double k_squared, double mass, double* out,
                                 char* errmsg, size_t errmsg_len) {
  if (fe_status s = require(out != nullptr, "null output pointer", errmsg,
                            errmsg_len))
    return s;
  return guarded(errmsg, errmsg_len, [&] {
    *out = fieldent::prop::momentum_propagator(k_squared, mass);
  });
}

fe_status fe_position_propagator(double separation, double mass, double* out,
                                 char* errmsg, size_t errmsg_len) {
  if (fe_status s = require(out != nullptr, "null output pointer", errmsg,
                            errmsg_len))
    return s;
  return guarded(errmsg, errmsg_len, [&] {
    *out = fieldent::prop::position_propagator(separation, mass);
  });
}

fe_status fe_pv_position_propagator(double separation, double physical_mass,
                                    double regulator_mass, double* out,
                                    char* errmsg, size_t errmsg_len) {
  if (fe_status s = require(out != nullptr, "null output pointer", errmsg,
                            errmsg_len))
    return s;
  return guarded(errmsg, errmsg_len, [&] {
    *out = fieldent::prop::pv_position_propagator(separation, physical_mass,
                                                  regulator_mass);
  });
}

fe_status fe_discordant_integral(const double* masses,
                                 const double* regulators, size_t n_lines,
                                 double rel_tol, double* value, double* error,
                                 char* errmsg, size_t errmsg_len) {
  if (fe_status s = require(masses != nullptr && regulators != nullptr &&
                                value != nullptr && error != nullptr,
                            "null argument", errmsg, errmsg_len))
    return s;
  return guarded(errmsg, errmsg_len, [&] {
    auto lines = make_lines(masses, regulators, n_lines);
    auto r = fieldent::replica::discordant_integral(lines, rel_tol);
    *value = r.value;
    *error = r.error;
  });
}

fe_status fe_renyi_cubic(int alpha, double coupling, double vev, double mass,
                         double cutoff, double rel_tol, fe_result** out,
                         char* errmsg, size_t errmsg_len) {
  if (fe_status s = require(out != nullptr, "null output pointer", errmsg,
                            errmsg_len))
    return s;
  return guarded(errmsg, errmsg_len, [&] {
    *out = wrap(fieldent::replica::renyi_cubic(
        fieldent::model::RenyiIndex(alpha), coupling, vev, mass, cutoff,
        rel_tol));
  });
}

fe_status fe_renyi_unbroken(const fe_model* model, int alpha, double rel_tol,
                            fe_result** out, char* errmsg,
                            size_t errmsg_len) {
  if (fe_status s = require(model != nullptr && out != nullptr,
                            "null argument", errmsg, errmsg_len))
    return s;
  return guarded(errmsg, errmsg_len, [&] {
    *out = wrap(fieldent::replica::renyi_unbroken(
        fieldent::model::RenyiIndex(alpha), model->theory, rel_tol));
  });
}

fe_status fe_renyi_ssb(const fe_model* model, int alpha, double lambda_u,
                       double c_t, double rel_tol, fe_result** out,
                       char* errmsg, size_t errmsg_len) {
  if (fe_status s = require(model != nullptr && out != nullptr,
                            "null argument", errmsg, errmsg_len))
    return s;
  return guarded(errmsg, errmsg_len, [&] {
    *out = wrap(fieldent::replica::renyi_ssb(fieldent::model::RenyiIndex(alpha),
                                             model->theory, lambda_u, c_t,
                                             rel_tol));
  });
}

fe_status fe_renyi_ssb_pi(const fe_model* model, int alpha, double lambda_u,
                          double c_t, double rel_tol, fe_result** out,
                          char* errmsg, size_t errmsg_len) {
  if (fe_status s = require(model != nullptr && out != nullptr,
                            "null argument", errmsg, errmsg_len))
    return s;
  return guarded(errmsg, errmsg_len, [&] {
    *out = wrap(fieldent::replica::renyi_ssb_pi(
        fieldent::model::RenyiIndex(alpha), model->theory, lambda_u, c_t,
        rel_tol));
  });
}

fe_status fe_xcheck_momentum(const fe_model* model, int alpha,
                             long long samples, uint64_t seed, int threads,
                             double target_rel, fe_result** out, char* errmsg,
                             size_t errmsg_len) {
  if (fe_status s = require(model != nullptr && out != nullptr,
                            "null argument", errmsg, errmsg_len))
    return s;
  return guarded(errmsg, errmsg_len, [&] {
    fieldent::replica::XcheckOptions opt;
    opt.samples = samples;
    opt.seed = seed;
    opt.threads = threads;
    if (target_rel > 0.0) opt.target_rel = target_rel;
    *out = wrap(fieldent::replica::xcheck_momentum(
        fieldent::model::RenyiIndex(alpha), model->theory, opt));
  });
}

fe_status fe_fit_power_law(const double* x, const double* y, size_t n,
                           double* prefactor, double* exponent,
                           double* residual, char* errmsg,
                           size_t errmsg_len) {
  if (fe_status s = require(x != nullptr && y != nullptr &&
                                prefactor != nullptr && exponent != nullptr &&
                                residual != nullptr,
                            "null argument", errmsg, errmsg_len))
    return s;
  return guarded(errmsg, errmsg_len, [&] {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(n);
    for (size_t i = 0; i < n; ++i) pts.emplace_back(x[i], y[i]);
    auto fit = fieldent::replica::fit_power_law(pts);
    *prefactor = fit.prefactor;
    *exponent = fit.exponent;
    *residual = fit.residual;
  });
}

fe_status fe_short_range_fraction(const double* masses,
                                  const double* regulators, size_t n_lines,
                                  double range, double* out, char* errmsg,
                                  size_t errmsg_len) {
  if (fe_status s = require(masses != nullptr && regulators != nullptr &&
                                out != nullptr,
                            "null argument", errmsg, errmsg_len))
    return s;
  return guarded(errmsg, errmsg_len, [&] {
    auto lines = make_lines(masses, regulators, n_lines);
    *out = fieldent::replica::short_range_fraction(lines, range);
  });
}

double fe_result_value(const fe_result* result) {
  return result ? result->result.value_per_volume : 0.0;
}

double fe_result_error(const fe_result* result) {
  return result ? result->result.error : 0.0;
}

int fe_result_alpha(const fe_result* result) {
  return result ? result->result.alpha : 0;
}

double fe_result_cutoff(const fe_result* result) {
  return result ? result->result.cutoff : 0.0;
}

uint64_t fe_result_seed(const fe_result* result) {
  return result ? result->result.seed : 0;
}

long long fe_result_samples(const fe_result* result) {
  return result ? result->result.samples : 0;
}

size_t fe_result_contribution_count(const fe_result* result) {
  return result ? result->result.contributions.size() : 0;
}

fe_status fe_result_contribution(const fe_result* result, size_t index,
                                 const char** label, double* value,
                                 double* error) {
  if (result == nullptr || index >= result->result.contributions.size())
    return FE_ERR_INVALID;
  const auto& c = result->result.contributions[index];
  if (label != nullptr) *label = c.label.c_str();
  if (value != nullptr) *value = c.value;
  if (error != nullptr) *error = c.error;
  return FE_OK;
}

void fe_result_free(fe_result* result) { delete result; }

fe_status fe_oracle_entropy(int dims, int sites_per_dim, double mass_phi,
                            double mass_chi, double g, int alpha, double* out,
                            char* errmsg, size_t errmsg_len) {
  if (fe_status s = require(out != nullptr, "null output pointer", errmsg,
                            errmsg_len))
    return s;
  return guarded(errmsg, errmsg_len, [&] {
    fieldent::oracle::LatticeSpec spec{dims, sites_per_dim, mass_phi, mass_chi,
                                       g};
    *out = fieldent::oracle::renyi_field_entropy(spec, alpha);
  });
}

fe_status fe_oracle_check(int dims, int sites_per_dim, double mass_phi,
                          double mass_chi, const double* couplings,
                          size_t n_couplings, int alpha, fe_oracle_report* out,
                          char* errmsg, size_t errmsg_len) {
  if (fe_status s = require(couplings != nullptr && out != nullptr,
                            "null argument", errmsg, errmsg_len))
    return s;
  return guarded(errmsg, errmsg_len, [&] {
    fieldent::oracle::LatticeSpec spec{dims, sites_per_dim, mass_phi, mass_chi,
                                       couplings[0]};
    std::span<const double> gs(couplings, n_couplings);
    auto report = fieldent::oracle::perturbative_check(spec, gs, alpha);
    out->coupling_exponent = report.coupling_exponent;
    out->exponent_residual = report.exponent_residual;
    out->s3_over_s2 = report.s3_over_s2;
    out->volume_law_gap = report.volume_law_gap;
    out->per_site_entropy_l = report.per_site_entropy[0].second;
    out->per_site_entropy_2l = report.per_site_entropy[1].second;
    out->per_site_entropy_4l = report.per_site_entropy[2].second;
  });
}

}  // extern "C"
