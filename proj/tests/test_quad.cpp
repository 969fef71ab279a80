#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fieldent/errors.hpp"
#include "fieldent/propagators.hpp"
#include "fieldent/quad.hpp"
#include "test_oracles.hpp"

using namespace fieldent;
using quad::QuadratureResult;
using quad::Vec4;

namespace {

double separation(const Vec4& x, const Vec4& y) {
  double acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += (x[i] - y[i]) * (x[i] - y[i]);
  return std::sqrt(acc);
}

}  // namespace

TEST_CASE("adaptive radial: gamma function integrand") {
  auto f = [](double s) { return s * s * s * s * std::exp(-s); };
  QuadratureResult r = quad::adaptive_radial(f, 0.0, 1e-10);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(24.0).epsilon(1e-10));
  CHECK(r.error <= 1e-10 * 24.0 * 1.0001);
}

TEST_CASE("adaptive radial: windowed constant integrand") {
  // s^4 * [massless propagator]^2 restricted to [1, 3] is constant
  // 1/(16 pi^4); integral = 2/(16 pi^4).
  auto f = [](double s) {
    if (s < 1.0 || s > 3.0) return 0.0;
    const double p = prop::position_propagator(s, 0.0);
    return s * s * s * s * p * p;
  };
  QuadratureResult r = quad::adaptive_radial(f, 0.0, 1e-8);
  // Reference: mpmath, 2/(16 pi^4).
  CHECK(r.value == doctest::Approx(0.0012832477818355419).epsilon(1e-7));
}

TEST_CASE("adaptive radial: diagram integrand vs fixed composite rule") {
  auto f = [](double s) {
    const double p = prop::pv_position_propagator(s, 1.0, 20.0);
    return s * s * s * s * p * p * p * p;
  };
  QuadratureResult r = quad::adaptive_radial(f, 0.0, 1e-10);
  const double reference = testoracle::composite_gauss(f, 1e-6, 60.0, 800);
  CHECK(r.value == doctest::Approx(reference).epsilon(1e-8));
}

TEST_CASE("adaptive radial: converged means the tolerance was met") {
  auto f = [](double s) { return std::exp(-s); };
  for (double tol : {1e-4, 1e-8, 1e-11}) {
    QuadratureResult r = quad::adaptive_radial(f, 0.0, tol);
    CHECK(r.converged);
    CHECK(r.error <= tol * std::abs(r.value) * 1.0001);
    CHECK(r.value == doctest::Approx(1.0).epsilon(tol * 10));
  }
}

TEST_CASE("adaptive radial: lower bound shifts the window") {
  auto f = [](double s) { return std::exp(-s); };
  QuadratureResult r = quad::adaptive_radial(f, 2.0, 1e-9);
  CHECK(r.value == doctest::Approx(std::exp(-2.0)).epsilon(1e-8));
}

TEST_CASE("adaptive radial: budget exhaustion raises") {
  quad::RadialOptions opt;
  opt.rel_tol = 1e-12;
  opt.max_intervals = 4;
  auto f = [](double s) { return std::exp(-s) * std::cos(40.0 * s); };
  CHECK_THROWS_AS(quad::adaptive_radial(f, 0.0, opt), IntegrationError);
}

TEST_CASE("adaptive radial: non-decaying integrand raises divergence") {
  auto f = [](double s) { return s * s / (1.0 + s * s); };
  CHECK_THROWS_AS(quad::adaptive_radial(f, 0.0, 1e-8), DivergenceError);
}

TEST_CASE("adaptive radial: tolerance range enforced") {
  auto f = [](double s) { return std::exp(-s); };
  CHECK_THROWS_AS(quad::adaptive_radial(f, 0.0, 1e-13), DomainError);
  CHECK_THROWS_AS(quad::adaptive_radial(f, 0.0, 0.5), DomainError);
}

TEST_CASE("mc halfspaces: massive two-line integrand vs radial reduction") {
  auto line = [](double s) { return prop::position_propagator(s, 1.0); };
  auto integrand = [&](const Vec4& x, const Vec4& y) {
    const double s = separation(x, y);
    const double p = line(s);
    return p * p;
  };
  auto radial = [&](double s) {
    const double p = line(s);
    return s * s * s * s * p * p;
  };
  QuadratureResult ref = quad::adaptive_radial(radial, 0.0, 1e-10);
  const double expected = 8.0 * M_PI / 3.0 * ref.value;

  QuadratureResult mc = quad::mc_halfspaces(integrand, 1.0, 400000, 2024);
  CHECK(std::abs(mc.value - expected) <= 3.0 * mc.error);
  CHECK(mc.error < 0.05 * expected);
}

TEST_CASE("mc halfspaces: zero integrand gives exact zero") {
  auto zero = [](const Vec4&, const Vec4&) { return 0.0; };
  QuadratureResult r = quad::mc_halfspaces(zero, 1.0, 10000, 7);
  CHECK(r.value == 0.0);
  CHECK(r.error == 0.0);
  CHECK(r.converged);
}

TEST_CASE("mc halfspaces: bitwise deterministic for a fixed seed") {
  auto integrand = [](const Vec4& x, const Vec4& y) {
    const double s = separation(x, y);
    return std::exp(-1.3 * s);
  };
  QuadratureResult a = quad::mc_halfspaces(integrand, 1.0, 50000, 99);
  QuadratureResult b = quad::mc_halfspaces(integrand, 1.0, 50000, 99);
  CHECK(a.value == b.value);
  CHECK(a.error == b.error);

  quad::HalfspaceOptions opt;
  opt.sampler_scale = 1.0;
  opt.tail_scale = 1.0;
  opt.samples = 50000;
  opt.seed = 99;
  opt.threads = 4;
  QuadratureResult c = quad::mc_halfspaces(integrand, opt);
  CHECK(c.value == a.value);  // identical for any worker count
  CHECK(c.error == a.error);
}

TEST_CASE("mc halfspaces: error shrinks like 1/sqrt(samples)") {
  auto integrand = [](const Vec4& x, const Vec4& y) {
    const double s = separation(x, y);
    return std::exp(-2.0 * s);
  };
  QuadratureResult small = quad::mc_halfspaces(integrand, 0.5, 100000, 5);
  QuadratureResult big = quad::mc_halfspaces(integrand, 0.5, 400000, 5);
  const double ratio = big.error / small.error;
  CHECK(ratio > 0.35);
  CHECK(ratio < 0.65);  // ~0.5 expected
}

TEST_CASE("mc halfspaces: 3-sigma interval calibration") {
  // Known closed form: integrand exp(-kappa s) integrates to 64 pi/kappa^5.
  int covered = 0;
  const int trials = 120;
  for (int t = 0; t < trials; ++t) {
    const double kappa = 0.5 + 2.5 * (t % 25) / 24.0;
    auto integrand = [kappa](const Vec4& x, const Vec4& y) {
      return std::exp(-kappa * separation(x, y));
    };
    const double truth = 64.0 * M_PI / std::pow(kappa, 5);
    QuadratureResult r =
        quad::mc_halfspaces(integrand, 1.0 / kappa, 20000, 1000 + t);
    if (std::abs(r.value - truth) <= 3.0 * r.error) ++covered;
  }
  CHECK(covered >= trials * 99 / 100);
}

TEST_CASE("mc halfspaces: input validation") {
  auto zero = [](const Vec4&, const Vec4&) { return 0.0; };
  CHECK_THROWS_AS(quad::mc_halfspaces(zero, 0.0, 1000, 1), DomainError);
  CHECK_THROWS_AS(quad::mc_halfspaces(zero, 1.0, 1, 1), DomainError);
}
