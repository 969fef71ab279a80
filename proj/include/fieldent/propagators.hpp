#pragma once

namespace fieldent::prop {

// Euclidean momentum-space propagator 1/(k^2 + m^2).
double momentum_propagator(double k_squared, double mass);

// 4D Euclidean position-space propagator at separation s > 0:
//   m = 0:  1/(4 pi^2 s^2)
//   m > 0:  m K1(m s) / (4 pi^2 s)
// Continuous in m at m -> 0 for fixed s. Underflows to 0 for m s > 705.
double position_propagator(double separation, double mass);

// Pauli-Villars regulated line: P(s, m) - P(s, regulator). The 1/s^2
// singularities cancel, leaving an O(log) rise at s -> 0; the value is
// strictly positive because the propagator decreases with mass.
double pv_position_propagator(double separation, double physical_mass,
                              double regulator_mass);

// One propagator line with its regulator; the unit every diagram is built of.
struct RegulatedPropagator {
  double physical_mass;
  double regulator_mass;

  RegulatedPropagator(double physical_mass, double regulator_mass);
  double operator()(double separation) const;
};

}  // namespace fieldent::prop
