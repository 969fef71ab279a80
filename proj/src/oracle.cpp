#include "fieldent/oracle.hpp"

#include <cmath>
#include <sstream>

#include "fieldent/errors.hpp"
#include "fieldent/replica.hpp"

namespace fieldent::oracle {

namespace {

constexpr double kNuFloorTol = 1e-10;

double entropy_term(double nu, int alpha) {
  // 1/(alpha-1) * ln[(nu+1/2)^alpha - (nu-1/2)^alpha]; nu = 1/2 gives 0.
  const double d = nu - 0.5;
  const double big = std::pow(nu + 0.5, alpha);
  const double small = d > 0.0 ? std::pow(d, alpha) : 0.0;
  return std::log(big - small) / (alpha - 1);
}

}  // namespace

void LatticeSpec::validate() const {
  if (dims < 1 || dims > 3) throw DomainError("dims must be 1, 2 or 3");
  if (sites_per_dim < 2) throw DomainError("need at least 2 sites per dim");
  if (mass_phi <= 0.0 || mass_chi <= 0.0)
    throw DomainError("lattice masses must be positive");
  if (!(bilinear_g * bilinear_g < mass_phi * mass_phi * mass_chi * mass_chi)) {
    std::ostringstream os;
    os << "unstable coupling: g^2 = " << bilinear_g * bilinear_g
       << " must stay below m_phi^2 m_chi^2 = "
       << mass_phi * mass_phi * mass_chi * mass_chi;
    throw DomainError(os.str());
  }
}

long LatticeSpec::site_count() const {
  long v = 1;
  for (int d = 0; d < dims; ++d) v *= sites_per_dim;
  return v;
}

CovarianceData ground_state_covariance(const LatticeSpec& spec) {
  spec.validate();
  const int L = spec.sites_per_dim;
  const double m_phi_sq = spec.mass_phi * spec.mass_phi;
  const double m_chi_sq = spec.mass_chi * spec.mass_chi;
  const double g = spec.bilinear_g;

  CovarianceData cov;
  cov.spec = spec;
  cov.modes.reserve(static_cast<std::size_t>(spec.site_count()));

  for (long flat = 0; flat < spec.site_count(); ++flat) {
    long rem = flat;
    double khat2 = 0.0;
    for (int d = 0; d < spec.dims; ++d) {
      const int nd = static_cast<int>(rem % L);
      rem /= L;
      const double sn = std::sin(M_PI * nd / L);
      khat2 += 4.0 * sn * sn;
    }

    const double a = khat2 + m_phi_sq;
    const double b = khat2 + m_chi_sq;
    const double mean = 0.5 * (a + b);
    const double disc = std::sqrt(0.25 * (a - b) * (a - b) + g * g);
    const double mu_plus = mean + disc;
    const double mu_minus = mean - disc;
    if (!(mu_minus > 0.0))
      throw DomainError("normal mode with non-positive frequency squared");

    const double omega_plus = std::sqrt(mu_plus);
    const double omega_minus = std::sqrt(mu_minus);
    // Eigenvector of mu_plus is (cos theta, sin theta).
    const double theta = 0.5 * std::atan2(2.0 * g, a - b);
    const double c = std::cos(theta);
    const double s = std::sin(theta);

    ModeCovariance m;
    m.khat2 = khat2;
    m.omega_plus = omega_plus;
    m.omega_minus = omega_minus;
    m.mixing_angle = theta;
    m.phi_phi = c * c / (2.0 * omega_plus) + s * s / (2.0 * omega_minus);
    m.chi_chi = s * s / (2.0 * omega_plus) + c * c / (2.0 * omega_minus);
    m.pphi_pphi = c * c * omega_plus / 2.0 + s * s * omega_minus / 2.0;
    m.pchi_pchi = s * s * omega_plus / 2.0 + c * c * omega_minus / 2.0;
    m.phi_chi = c * s * (1.0 / (2.0 * omega_plus) - 1.0 / (2.0 * omega_minus));
    m.pphi_pchi = c * s * (omega_plus - omega_minus) / 2.0;
    cov.modes.push_back(m);
  }
  return cov;
}

std::vector<double> symplectic_spectrum(const CovarianceData& cov) {
  std::vector<double> nus;
  nus.reserve(cov.modes.size());
  for (const auto& m : cov.modes) {
    double nu = std::sqrt(m.phi_phi * m.pphi_pphi);
    if (nu < 0.5) {
      if (nu < 0.5 - kNuFloorTol)
        throw DomainError("symplectic eigenvalue below the physical floor");
      nu = 0.5;
    }
    nus.push_back(nu);
  }
  return nus;
}

double renyi_field_entropy(const LatticeSpec& spec, int alpha) {
  if (alpha < 2) throw DomainError("integer alpha >= 2 required");
  spec.validate();
  // Decoupled fields form an exact product state.
  if (spec.bilinear_g == 0.0) return 0.0;

  CovarianceData cov = ground_state_covariance(spec);
  double total = 0.0;
  for (double nu : symplectic_spectrum(cov)) total += entropy_term(nu, alpha);
  return total;
}

PerturbativeReport perturbative_check(const LatticeSpec& base,
                                      std::span<const double> couplings,
                                      int alpha) {
  base.validate();
  if (couplings.size() < 2)
    throw DomainError("perturbative check needs at least 2 couplings");

  PerturbativeReport report;
  double smallest_g = couplings[0];
  std::vector<std::pair<double, double>> points;
  for (double g : couplings) {
    LatticeSpec spec = base;
    spec.bilinear_g = g;
    const double s_val = renyi_field_entropy(spec, alpha);
    points.emplace_back(g, s_val);
    if (std::abs(g) < std::abs(smallest_g)) smallest_g = g;
  }
  report.entropy_vs_g = points;

  if (points.size() >= 4) {
    replica::PowerLawFit fit = replica::fit_power_law(points);
    report.coupling_exponent = fit.exponent;
    report.exponent_residual = fit.residual;
  } else {
    // Two-point log-log slope when the sweep is too short for a fit.
    const auto& lo = points.front();
    const auto& hi = points.back();
    report.coupling_exponent = std::log(hi.second / lo.second) /
                               std::log(hi.first / lo.first);
    report.exponent_residual = 0.0;
  }

  {
    LatticeSpec spec = base;
    spec.bilinear_g = smallest_g;
    report.s3_over_s2 =
        renyi_field_entropy(spec, 3) / renyi_field_entropy(spec, 2);
  }

  for (int factor : {1, 2, 4}) {
    LatticeSpec spec = base;
    spec.sites_per_dim = base.sites_per_dim * factor;
    const double sites = static_cast<double>(spec.site_count());
    report.per_site_entropy.emplace_back(
        spec.sites_per_dim, renyi_field_entropy(spec, alpha) / sites);
  }
  const double s_mid = report.per_site_entropy[1].second;
  const double s_big = report.per_site_entropy[2].second;
  report.volume_law_gap = std::abs(s_big - s_mid) / std::abs(s_mid);
  return report;
}

}  // namespace fieldent::oracle
