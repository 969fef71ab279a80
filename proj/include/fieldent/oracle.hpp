#pragma once

#include <span>
#include <utility>
#include <vector>

namespace fieldent::oracle {

// Two scalar lattice fields phi, chi with a bilinear site coupling
// g * phi * chi: exactly solvable, so the ground-state entanglement between
// the fields is available in closed form as a reference for the replica
// machinery (order in the coupling, alpha-prefactor, volume law).
struct LatticeSpec {
  int dims = 1;               // 1..3
  int sites_per_dim = 8;      // periodic; even L preferred but not enforced
  double mass_phi = 1.0;      // lattice units, spacing = 1
  double mass_chi = 1.0;
  double bilinear_g = 0.0;

  // Throws DomainError on bad geometry or when g^2 >= m_phi^2 m_chi^2
  // (a normal mode would turn unstable).
  void validate() const;
  long site_count() const;
};

// Ground-state second moments of one momentum mode in the (phi, chi) basis.
struct ModeCovariance {
  double khat2 = 0.0;         // sum_j 4 sin^2(k_j / 2)
  double omega_plus = 0.0;    // normal frequencies, omega_plus >= omega_minus
  double omega_minus = 0.0;
  double mixing_angle = 0.0;  // pi/4 for equal masses
  double phi_phi = 0.0;
  double pphi_pphi = 0.0;
  double chi_chi = 0.0;
  double pchi_pchi = 0.0;
  double phi_chi = 0.0;
  double pphi_pchi = 0.0;
};

struct CovarianceData {
  LatticeSpec spec;
  std::vector<ModeCovariance> modes;
};

// Diagonalizes the 2x2 mass matrix [[khat2+m_phi^2, g], [g, khat2+m_chi^2]]
// per lattice momentum and assembles the mode moments.
CovarianceData ground_state_covariance(const LatticeSpec& spec);

// Symplectic eigenvalue nu_k = sqrt(<phi phi> <pi pi>) of the phi reduction,
// one entry per mode, floored at 1/2 (tolerance 1e-10 for roundoff).
std::vector<double> symplectic_spectrum(const CovarianceData& cov);

// Renyi entropy of the phi reduction,
//   S_alpha = 1/(alpha-1) sum_k ln[(nu_k + 1/2)^alpha - (nu_k - 1/2)^alpha].
// Exactly zero for g = 0.
double renyi_field_entropy(const LatticeSpec& spec, int alpha);

struct PerturbativeReport {
  // ln S vs ln g fit over the supplied couplings; 2 at leading order.
  double coupling_exponent = 0.0;
  double exponent_residual = 0.0;
  // S_3 / S_2 at the smallest coupling; 3/4 in the g -> 0 limit.
  double s3_over_s2 = 0.0;
  std::vector<std::pair<double, double>> entropy_vs_g;
  // Per-site entropy at L, 2L, 4L and the relative gap of the last pair;
  // the gap shrinking with L is the volume law.
  std::vector<std::pair<int, double>> per_site_entropy;
  double volume_law_gap = 0.0;
};

// Structural checks against the exact solution: quadratic onset in g, the
// alpha/(alpha-1) prefactor, and extensivity.
PerturbativeReport perturbative_check(const LatticeSpec& base,
                                      std::span<const double> couplings,
                                      int alpha);

}  // namespace fieldent::oracle
