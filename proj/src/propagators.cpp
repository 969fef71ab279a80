#include "fieldent/propagators.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <sstream>

#include "fieldent/errors.hpp"

namespace fieldent::prop {

namespace {

constexpr double kFourPiSq = 4.0 * M_PI * M_PI;
// K1(z) ~ sqrt(pi/2z) e^-z is subnormal past this point; the line is dead.
constexpr double kBesselUnderflow = 705.0;

}  // namespace

double momentum_propagator(double k_squared, double mass) {
  if (k_squared < 0.0) throw DomainError("k_squared must be >= 0");
  if (mass < 0.0) throw DomainError("mass must be >= 0");
  const double denom = k_squared + mass * mass;
  if (denom == 0.0)
    throw DomainError("massless propagator pole at k^2 = 0");
  return 1.0 / denom;
}

double position_propagator(double separation, double mass) {
  if (!(separation > 0.0))
    throw DomainError("separation must be positive");
  if (mass < 0.0) throw DomainError("mass must be >= 0");
  if (mass == 0.0) return 1.0 / (kFourPiSq * separation * separation);
  const double z = mass * separation;
  if (z > kBesselUnderflow) return 0.0;
  return mass * boost::math::cyl_bessel_k(1, z) / (kFourPiSq * separation);
}

double pv_position_propagator(double separation, double physical_mass,
                              double regulator_mass) {
  if (!(regulator_mass > physical_mass)) {
    std::ostringstream os;
    os << "regulator mass (" << regulator_mass
       << ") must exceed the physical mass (" << physical_mass << ")";
    throw DomainError(os.str());
  }
  return position_propagator(separation, physical_mass) -
         position_propagator(separation, regulator_mass);
}

RegulatedPropagator::RegulatedPropagator(double physical_mass,
                                         double regulator_mass)
    : physical_mass(physical_mass), regulator_mass(regulator_mass) {
  if (physical_mass < 0.0) throw DomainError("mass must be >= 0");
  if (!(regulator_mass > physical_mass))
    throw DomainError("regulator mass must exceed the physical mass");
  if (!(regulator_mass > 0.0) || !std::isfinite(regulator_mass))
    throw DomainError("regulator mass must be positive and finite");
}

double RegulatedPropagator::operator()(double separation) const {
  return position_propagator(separation, physical_mass) -
         position_propagator(separation, regulator_mass);
}

}  // namespace fieldent::prop
