#include "fieldent/model.hpp"

#include <cmath>
#include <sstream>

#include "fieldent/errors.hpp"

namespace fieldent::model {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw DomainError(msg); }

void check_finite(double x, const char* name) {
  if (!std::isfinite(x)) fail(std::string(name) + " must be finite");
}

}  // namespace

FieldTheory FieldTheory::unbroken(int n_fields, double coupling, double mass,
                                  double cutoff) {
  FieldTheory t{n_fields, coupling, mass, Phase::Unbroken, cutoff};
  t.validate();
  return t;
}

FieldTheory FieldTheory::broken(int n_fields, double coupling, double mu,
                                double cutoff) {
  FieldTheory t{n_fields, coupling, mu, Phase::Broken, cutoff};
  t.validate();
  return t;
}

void FieldTheory::validate() const {
  check_finite(coupling, "coupling");
  check_finite(mass, "mass");
  check_finite(cutoff, "cutoff");
  if (n_fields < 2) fail("n_fields must be >= 2");
  if (cutoff <= 0.0) fail("cutoff must be positive");
  if (phase == Phase::Unbroken) {
    // coupling = 0 is the free theory (zero entanglement), still admissible.
    if (coupling < 0.0) fail("coupling must be >= 0");
    if (mass < 0.0) fail("mass must be >= 0 in the unbroken phase");
    if (mass > 0.0 && cutoff < 2.0 * mass)
      fail("cutoff/mass must be >= 2, otherwise the result is "
           "regulator-dominated");
  } else {
    if (coupling <= 0.0) fail("coupling must be positive in the broken phase");
    if (coupling >= 0.5)
      fail("broken phase requires a weak coupling (lambda < 0.5)");
    if (mass <= 0.0) fail("mu must be positive in the broken phase");
    if (cutoff < 2.0 * mass)
      fail("cutoff/mu must be >= 2, otherwise the result is "
           "regulator-dominated");
  }
}

RenyiIndex::RenyiIndex(int a) : alpha(a) {
  if (a < 2)
    fail("Renyi index must be an integer >= 2; the alpha -> 1 limit is not "
         "accessible at this order");
}

double ssb_shift_scale(double lambda_u, int n_fields, double cutoff,
                       double c_t) {
  check_finite(lambda_u, "lambda_u");
  if (n_fields < 2) fail("n_fields must be >= 2");
  if (cutoff <= 0.0) fail("cutoff must be positive");
  if (c_t <= 0.0) fail("c_t must be positive");
  if (lambda_u <= 0.0) fail("lambda_u must be positive");
  if (lambda_u >= std::exp(-1.0)) {
    std::ostringstream os;
    os << "lambda_u = " << lambda_u
       << " is not admissible: the tadpole-resummed shift scale requires "
          "lambda_u < 1/e so that ln(1/lambda_u) > 1";
    fail(os.str());
  }
  const double n = static_cast<double>(n_fields);
  const double log_term = std::log(1.0 / lambda_u);
  return cutoff * std::sqrt(c_t * (n - 1.0) / ((n + 8.0) * log_term));
}

std::pair<double, double> effective_masses(double coupling,
                                           double shift_scale) {
  if (coupling <= 0.0) fail("coupling must be positive");
  if (shift_scale <= 0.0) fail("shift_scale must be positive");
  const double m_pi = std::sqrt(coupling) * shift_scale;
  // Kept as an exact sqrt(3) multiple of m_pi.
  const double m_sigma = std::sqrt(3.0) * m_pi;
  return {m_sigma, m_pi};
}

SsbParameters ssb_parameters(const FieldTheory& theory, double lambda_u,
                             double c_t) {
  theory.validate();
  if (theory.phase != Phase::Broken)
    fail("ssb parameters are defined only for the broken phase");
  SsbParameters p;
  p.c_t = c_t;
  p.shift_scale =
      ssb_shift_scale(lambda_u, theory.n_fields, theory.cutoff, c_t);
  auto [m_sigma, m_pi] = effective_masses(lambda_u, p.shift_scale);
  p.m_sigma_eff = m_sigma;
  p.m_pi_eff = m_pi;
  p.vev = theory.mass / std::sqrt(theory.coupling);
  return p;
}

}  // namespace fieldent::model
