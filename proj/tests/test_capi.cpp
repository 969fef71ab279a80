// Exercises the shared-library surface exactly the way an external caller
// would: opaque handles, status codes, message buffers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "fieldent/fieldent.h"

TEST_CASE("version string") {
  const char* v = fe_version();
  REQUIRE(v != nullptr);
  CHECK(std::strlen(v) >= 5);
}

TEST_CASE("model lifecycle and validation") {
  char err[256] = {0};
  fe_model* ok = fe_model_unbroken(2, 0.1, 1.0, 20.0, err, sizeof(err));
  REQUIRE(ok != nullptr);
  fe_model_free(ok);

  fe_model* bad = fe_model_unbroken(1, 0.1, 1.0, 20.0, err, sizeof(err));
  CHECK(bad == nullptr);
  CHECK(std::string(err).find("n_fields") != std::string::npos);
  fe_model_free(nullptr);  // must be a no-op
}

TEST_CASE("unbroken entropy through the C surface") {
  char err[256] = {0};
  fe_model* model = fe_model_unbroken(2, 0.1, 1.0, 20.0, err, sizeof(err));
  REQUIRE(model != nullptr);

  fe_result* result = nullptr;
  REQUIRE(fe_renyi_unbroken(model, 2, 1e-8, &result, err, sizeof(err)) ==
          FE_OK);
  REQUIRE(result != nullptr);
  CHECK(fe_result_value(result) ==
        doctest::Approx(1.4252395136052432e-5).epsilon(1e-8));
  CHECK(fe_result_alpha(result) == 2);
  CHECK(fe_result_cutoff(result) == 20.0);
  REQUIRE(fe_result_contribution_count(result) == 1);

  const char* label = nullptr;
  double value = 0.0, error = 0.0;
  REQUIRE(fe_result_contribution(result, 0, &label, &value, &error) == FE_OK);
  CHECK(std::string(label) == "DDKK");
  CHECK(value == fe_result_value(result));
  CHECK(fe_result_contribution(result, 5, &label, &value, &error) ==
        FE_ERR_INVALID);

  fe_result_free(result);
  fe_model_free(model);
}

TEST_CASE("error codes carry through") {
  char err[256] = {0};
  fe_model* model = fe_model_broken(2, 0.01, 1.0, 20.0, err, sizeof(err));
  REQUIRE(model != nullptr);

  fe_result* result = nullptr;
  CHECK(fe_renyi_ssb(model, 2, 0.9, 1.0, 1e-8, &result, err, sizeof(err)) ==
        FE_ERR_DOMAIN);
  CHECK(std::string(err).find("lambda_u") != std::string::npos);

  CHECK(fe_renyi_unbroken(model, 2, 1e-8, &result, err, sizeof(err)) ==
        FE_ERR_DOMAIN);
  CHECK(fe_renyi_unbroken(nullptr, 2, 1e-8, &result, err, sizeof(err)) ==
        FE_ERR_INVALID);

  // alpha = 1 is rejected at the boundary
  CHECK(fe_renyi_ssb(model, 1, 0.01, 1.0, 1e-8, &result, err, sizeof(err)) ==
        FE_ERR_DOMAIN);
  fe_model_free(model);
}

TEST_CASE("broken-phase entropy and helpers") {
  char err[256] = {0};
  double u = 0.0;
  REQUIRE(fe_ssb_shift_scale(0.01, 2, 20.0, 1.0, &u, err, sizeof(err)) ==
          FE_OK);
  CHECK(u == doctest::Approx(2.94718333974407445).epsilon(1e-13));

  double m_sigma = 0.0, m_pi = 0.0;
  REQUIRE(fe_effective_masses(0.01, u, &m_sigma, &m_pi, err, sizeof(err)) ==
          FE_OK);
  CHECK(m_sigma == doctest::Approx(m_pi * std::sqrt(3.0)).epsilon(1e-15));

  fe_model* model = fe_model_broken(2, 0.01, 1.0, 20.0, err, sizeof(err));
  REQUIRE(model != nullptr);
  fe_result* ssb = nullptr;
  REQUIRE(fe_renyi_ssb(model, 2, 0.01, 1.0, 1e-8, &ssb, err, sizeof(err)) ==
          FE_OK);
  CHECK(fe_result_contribution_count(ssb) == 2);
  CHECK(fe_result_value(ssb) > 0.0);
  fe_result_free(ssb);
  fe_model_free(model);
}

TEST_CASE("propagators and discordant integral") {
  char err[256] = {0};
  double out = 0.0;
  REQUIRE(fe_momentum_propagator(3.0, 1.0, &out, err, sizeof(err)) == FE_OK);
  CHECK(out == doctest::Approx(0.25));
  CHECK(fe_momentum_propagator(0.0, 0.0, &out, err, sizeof(err)) ==
        FE_ERR_DOMAIN);
  REQUIRE(fe_position_propagator(1.0, 0.0, &out, err, sizeof(err)) == FE_OK);
  CHECK(out == doctest::Approx(1.0 / (4.0 * M_PI * M_PI)));
  REQUIRE(fe_pv_position_propagator(0.5, 1.0, 20.0, &out, err, sizeof(err)) ==
          FE_OK);
  CHECK(out > 0.0);

  const double masses[4] = {1.0, 1.0, 1.0, 1.0};
  const double regs[4] = {20.0, 20.0, 20.0, 20.0};
  double value = 0.0, error = 0.0;
  REQUIRE(fe_discordant_integral(masses, regs, 4, 1e-8, &value, &error, err,
                                 sizeof(err)) == FE_OK);
  CHECK(value == doctest::Approx(1.4252395136052432e-3).epsilon(1e-7));

  const double bad_masses[2] = {0.0, 0.0};
  const double bad_regs[2] = {10.0, 10.0};
  CHECK(fe_discordant_integral(bad_masses, bad_regs, 2, 1e-8, &value, &error,
                               err, sizeof(err)) == FE_ERR_INTEGRATION);

  double fraction = 0.0;
  REQUIRE(fe_short_range_fraction(masses, regs, 4, 0.5, &fraction, err,
                                  sizeof(err)) == FE_OK);
  CHECK(fraction < 0.01);
}

TEST_CASE("power law fit through the C surface") {
  char err[256] = {0};
  const double x[5] = {10.0, 20.0, 40.0, 80.0, 160.0};
  double y[5];
  for (int i = 0; i < 5; ++i) y[i] = 7.0 * x[i] * x[i] * x[i];
  double prefactor = 0.0, exponent = 0.0, residual = 0.0;
  REQUIRE(fe_fit_power_law(x, y, 5, &prefactor, &exponent, &residual, err,
                           sizeof(err)) == FE_OK);
  CHECK(prefactor == doctest::Approx(7.0).epsilon(1e-9));
  CHECK(exponent == doctest::Approx(3.0).epsilon(1e-11));
  CHECK(fe_fit_power_law(x, y, 2, &prefactor, &exponent, &residual, err,
                         sizeof(err)) == FE_ERR_DOMAIN);
  CHECK(fe_fit_power_law(nullptr, y, 5, &prefactor, &exponent, &residual, err,
                         sizeof(err)) == FE_ERR_INVALID);
}

TEST_CASE("xcheck through the C surface is reproducible") {
  char err[256] = {0};
  fe_model* model = fe_model_unbroken(2, 0.1, 1.0, 10.0, err, sizeof(err));
  REQUIRE(model != nullptr);
  fe_result* a = nullptr;
  fe_result* b = nullptr;
  REQUIRE(fe_xcheck_momentum(model, 2, 200000, 17, 1, 0.5, &a, err,
                             sizeof(err)) == FE_OK);
  REQUIRE(fe_xcheck_momentum(model, 2, 200000, 17, 2, 0.5, &b, err,
                             sizeof(err)) == FE_OK);
  CHECK(fe_result_value(a) == fe_result_value(b));
  CHECK(fe_result_seed(a) == 17);
  CHECK(fe_result_samples(a) == 200000);
  fe_result_free(a);
  fe_result_free(b);
  fe_model_free(model);
}

TEST_CASE("oracle through the C surface") {
  char err[256] = {0};
  double s2 = 0.0;
  REQUIRE(fe_oracle_entropy(1, 8, 1.0, 1.0, 0.3, 2, &s2, err, sizeof(err)) ==
          FE_OK);
  CHECK(s2 == doctest::Approx(2.520548267342089e-2).epsilon(1e-10));
  CHECK(fe_oracle_entropy(1, 8, 1.0, 1.0, 1.5, 2, &s2, err, sizeof(err)) ==
        FE_ERR_DOMAIN);

  const double sweep[3] = {0.08, 0.04, 0.02};
  fe_oracle_report report{};
  REQUIRE(fe_oracle_check(1, 16, 1.0, 1.0, sweep, 3, 2, &report, err,
                          sizeof(err)) == FE_OK);
  CHECK(report.coupling_exponent == doctest::Approx(2.0).epsilon(0.025));
  CHECK(report.s3_over_s2 == doctest::Approx(0.75).epsilon(0.0267));
  CHECK(report.volume_law_gap < 0.05);
}
