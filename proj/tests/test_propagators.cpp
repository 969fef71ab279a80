#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fieldent/errors.hpp"
#include "fieldent/propagators.hpp"
#include "test_oracles.hpp"

using namespace fieldent;

TEST_CASE("momentum propagator") {
  CHECK(prop::momentum_propagator(0.0, 1.0) == doctest::Approx(1.0));
  CHECK(prop::momentum_propagator(3.0, 1.0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(prop::momentum_propagator(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(prop::momentum_propagator(-1.0, 1.0), DomainError);
}

TEST_CASE("massless position propagator") {
  CHECK(prop::position_propagator(1.0, 0.0) ==
        doctest::Approx(1.0 / (4.0 * M_PI * M_PI)).epsilon(1e-15));
  CHECK_THROWS_AS(prop::position_propagator(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(prop::position_propagator(-1.0, 1.0), DomainError);
}

TEST_CASE("massive position propagator values") {
  // Reference: mpmath, K1(1)/(4 pi^2), 50 digits.
  CHECK(prop::position_propagator(1.0, 1.0) ==
        doctest::Approx(0.015246488251616219825).epsilon(1e-13));

  // small-argument limit: m s -> 0 approaches the massless form
  for (double ms : {1e-3, 1e-5, 1e-7}) {
    const double s = 0.37;
    const double m = ms / s;
    const double massless = prop::position_propagator(s, 0.0);
    CHECK(prop::position_propagator(s, m) ==
          doctest::Approx(massless).epsilon(10 * ms * ms));
  }

  // deep tail underflows to zero instead of raising
  CHECK(prop::position_propagator(1000.0, 1.0) == 0.0);
}

TEST_CASE("position propagator matches Fourier-Bessel transform") {
  // Independent oracle: radial quadrature of the momentum propagator.
  for (double m : {0.5, 1.0, 2.0}) {
    for (double s : {0.1 / m, 0.3 / m, 1.0 / m, 2.0 / m, 5.0 / m}) {
      const double oracle =
          testoracle::fourier_bessel_position_propagator(s, m);
      CHECK(prop::position_propagator(s, m) ==
            doctest::Approx(oracle).epsilon(1e-6));
    }
  }
}

TEST_CASE("position propagator monotone in separation and mass") {
  double prev_s = prop::position_propagator(0.05, 1.3);
  for (double s : {0.1, 0.4, 1.0, 2.5, 6.0}) {
    const double cur = prop::position_propagator(s, 1.3);
    CHECK(cur < prev_s);
    CHECK(cur > 0.0);
    prev_s = cur;
  }
  double prev_m = prop::position_propagator(0.8, 0.0);
  for (double m : {0.3, 1.0, 2.0, 5.0, 11.0}) {
    const double cur = prop::position_propagator(0.8, m);
    CHECK(cur < prev_m);
    CHECK(cur > 0.0);
    prev_m = cur;
  }
}

TEST_CASE("pv propagator preconditions and limits") {
  CHECK_THROWS_AS(prop::pv_position_propagator(1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(prop::pv_position_propagator(1.0, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(prop::RegulatedPropagator(1.0, 0.5), DomainError);

  // far from the regulator scale the subtraction is invisible
  const double far = prop::pv_position_propagator(8.0, 1.0, 10.0);
  CHECK(far / prop::position_propagator(8.0, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-10));

  // Reference: mpmath, 50 digits, 1/(4 pi^2 s^2) - 10 K1(0.1)/(4 pi^2 s)
  // at s = 0.01.
  CHECK(prop::pv_position_propagator(0.01, 0.0, 10.0) ==
        doctest::Approx(3.7021549494238585576).epsilon(1e-13));
}

TEST_CASE("pv propagator positive, singularity cancelled") {
  for (double m : {0.0, 0.5, 2.0})
    for (double reg : {5.0, 20.0, 100.0})
      for (double s : {1e-6, 1e-3, 0.1, 1.0, 4.0}) {
        const double v = prop::pv_position_propagator(s, m, reg);
        CHECK(v >= 0.0);
      }

  // s^2 * P_pv -> 0: the ratio to the unsubtracted propagator must die
  // as the 1/s^2 parts cancel.
  for (double reg : {10.0, 50.0}) {
    double prev = 1.0;
    for (double se : {1e-3, 1e-4, 1e-5, 1e-6}) {
      const double s = se / reg;
      const double ratio = prop::pv_position_propagator(s, 1.0, reg) /
                           prop::position_propagator(s, 1.0);
      CHECK(ratio < prev);
      prev = ratio;
    }
    CHECK(prev < 1e-10);
  }
}

TEST_CASE("regulated propagator line evaluates the subtraction") {
  prop::RegulatedPropagator line(1.0, 20.0);
  CHECK(line(0.3) ==
        doctest::Approx(prop::pv_position_propagator(0.3, 1.0, 20.0))
            .epsilon(1e-15));
}
