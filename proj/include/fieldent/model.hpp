#pragma once

#include <utility>

namespace fieldent::model {

enum class Phase { Unbroken, Broken };

// Parameters of the N-field scalar model with quartic coupling.
//
// In the unbroken phase all fields share the mass `mass` (m >= 0 allowed).
// In the broken phase `mass` stores mu, the magnitude of the tachyonic mass
// (m^2 = -mu^2), and the coupling must be small enough for the loop
// expansion around the shifted vacuum to make sense.
struct FieldTheory {
  int n_fields = 2;
  double coupling = 0.0;
  double mass = 0.0;
  Phase phase = Phase::Unbroken;
  double cutoff = 1.0;

  static FieldTheory unbroken(int n_fields, double coupling, double mass,
                              double cutoff);
  static FieldTheory broken(int n_fields, double coupling, double mu,
                            double cutoff);

  // Throws DomainError when any invariant is violated.
  void validate() const;
};

// Derived quantities of the broken phase expanded around the shift scale u.
struct SsbParameters {
  double shift_scale = 0.0;   // u
  double m_sigma_eff = 0.0;   // sqrt(3 lambda_u) * u
  double m_pi_eff = 0.0;      // sqrt(lambda_u) * u
  double c_t = 1.0;
  double vev = 0.0;           // mu / sqrt(lambda)
};

// Renyi index; only integer alpha >= 2 is meaningful here.
struct RenyiIndex {
  int alpha;
  explicit RenyiIndex(int a);
  // alpha/(alpha-1), the universal replica prefactor at this order.
  double prefactor() const { return static_cast<double>(alpha) / (alpha - 1); }
};

// Shift scale u = cutoff * sqrt(c_t (N-1) / ((N+8) ln(1/lambda_u))).
// Requires 0 < lambda_u < 1/e so the logarithm stays above one.
double ssb_shift_scale(double lambda_u, int n_fields, double cutoff,
                       double c_t);

// (m_sigma_eff, m_pi_eff) = (sqrt(3 lambda) u, sqrt(lambda) u).
// The first component is exactly sqrt(3) times the second.
std::pair<double, double> effective_masses(double coupling,
                                           double shift_scale);

// Convenience: all broken-phase derived parameters for a validated model.
SsbParameters ssb_parameters(const FieldTheory& theory, double lambda_u,
                             double c_t);

}  // namespace fieldent::model
