#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fieldent/model.hpp"
#include "fieldent/propagators.hpp"
#include "fieldent/quad.hpp"

namespace fieldent::replica {

// A two-vertex vacuum diagram: `focused_lines` propagators of the kept field
// and `traced_lines` propagators of the integrated-out fields run between
// the two vertices. The coefficient carries couplings and symmetry factors.
struct DiagramSpec {
  int focused_lines = 0;
  int traced_lines = 0;
  double coefficient = 0.0;
  double focused_mass = 0.0;
  double traced_mass = 0.0;
  double regulator = 1.0;
};

// A diagram contributes to the entropy only when both species propagate
// between the two vertices; diagrams connected by a single species appear
// identically in alpha*W_1 and W_alpha and drop out.
bool diagram_survives(const DiagramSpec& d);

// "D" per focused line followed by "K" per traced line, e.g. "DDKK".
std::string diagram_label(const DiagramSpec& d);

struct Contribution {
  std::string label;
  double value = 0.0;
  double error = 0.0;
};

struct EntropyResult {
  double value_per_volume = 0.0;
  double error = 0.0;
  int alpha = 2;
  double cutoff = 0.0;
  std::vector<Contribution> contributions;
  // Populated by Monte Carlo backed results.
  std::uint64_t seed = 0;
  long long samples = 0;
  int threads = 1;

  const Contribution* find(const std::string& label) const;
};

// Cross half-space integral of a product of regulated lines, per unit
// 3-volume:
//   2 int_{tau_x>0} d4x int_{tau_y<0} d4y  prod_i P_i(|x-y|)
// After shifting to relative coordinates the two time integrals collapse to
// int_0^inf dT T g(T), and the remaining 4D half-sphere angular integral with
// weight cos(theta) gives sin^3/3; together with both orderings the result is
//   (8 pi / 3) int_0^inf ds s^4 prod_i P_i(s).
quad::QuadratureResult discordant_integral(
    std::span<const prop::RegulatedPropagator> lines, double rel_tol = 1e-8);

// Replica contribution of one diagram per unit volume, including the
// alpha/(alpha-1) prefactor. Exactly zero for non-surviving diagrams.
Contribution evaluate_diagram(const DiagramSpec& d, model::RenyiIndex alpha,
                              double rel_tol = 1e-8);

// Cubic two-field model, L_I = lambda v sigma^3 + lambda v sigma pi^2:
// S per volume = lambda^2 v^2 * alpha/(alpha-1) * I[D K K].
EntropyResult renyi_cubic(model::RenyiIndex alpha, double coupling, double vev,
                          double mass, double cutoff, double rel_tol = 1e-8);

// Unbroken-symmetry N-field model:
// S per volume = (N-1) * lambda^2/2 * alpha/(alpha-1) * I[D D K K].
EntropyResult renyi_unbroken(model::RenyiIndex alpha,
                             const model::FieldTheory& theory,
                             double rel_tol = 1e-8);

struct XcheckOptions {
  long long samples = 1'000'000;
  std::uint64_t seed = 1;
  int threads = 1;
  double target_rel = 0.1;
  // Radial scale of the momentum importance density; 0 picks cutoff/2.
  double sampler_scale = 0.0;
};

// Independent momentum-space evaluation of the unbroken diagram: the three
// internal momenta are importance-sampled and the fourth line, combined with
// the half-space time integrations, becomes the kernel
//   (P_vec^2 - P_0^2 + m^2) / (sqrt(P_vec^2 + m^2) (P^2 + m^2)^2),
// PV-subtracted like every other line. Agrees with renyi_unbroken within
// statistics; throws PrecisionError if the sample budget misses target_rel.
EntropyResult xcheck_momentum(model::RenyiIndex alpha,
                              const model::FieldTheory& theory,
                              const XcheckOptions& opt);

// Broken phase expanded around the shift scale u: both diagram families
// contribute, evaluated with the effective masses,
//   S/V = alpha/(alpha-1) [ (N-1) lambda_u^2/2 I4 + (N-1) lambda_u^2 u^2 I3 ].
EntropyResult renyi_ssb(model::RenyiIndex alpha,
                        const model::FieldTheory& theory, double lambda_u,
                        double c_t, double rel_tol = 1e-8);

// Entropy of a single traced-species field in the broken phase: the
// u^2-dependent family loses its species multiplicity ((N-1)^2 -> (N-1)
// overall), everything else is unchanged. Coincides with renyi_ssb at N = 2.
EntropyResult renyi_ssb_pi(model::RenyiIndex alpha,
                           const model::FieldTheory& theory, double lambda_u,
                           double c_t, double rel_tol = 1e-8);

struct PowerLawFit {
  double prefactor = 0.0;
  double exponent = 0.0;
  double residual = 0.0;  // rms of log-space residuals
};

// Least squares fit of ln(y) = ln(prefactor) + exponent * ln(x).
// Needs >= 4 points with positive coordinates and nonzero spread.
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points);

// Share of the radial integral s^4 prod_i P_i(s) that lives beyond s > range.
// Tends to 1 as range -> 0; small for range >> 1/regulator.
double short_range_fraction(std::span<const prop::RegulatedPropagator> lines,
                            double range, double rel_tol = 1e-8);

}  // namespace fieldent::replica
