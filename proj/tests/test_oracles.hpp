// Independent reference implementations used only by tests. They must not
// share code paths with the library: the position propagator is rebuilt from
// a Fourier-Bessel transform of the momentum propagator, radial integrals
// from a fixed composite Gauss rule, and the lattice entropy from a dense
// diagonalization of the full quadratic form.
#pragma once

#include <functional>

#include "fieldent/oracle.hpp"

namespace testoracle {

// 4D Euclidean position propagator obtained by numerically transforming
// 1/(k^2 + m^2): massless closed form minus
//   m^2/(4 pi^2 s) * int_0^inf J1(k s)/(k^2 + m^2) dk,
// the oscillatory integral summed between Bessel zeros. Accurate to ~1e-8
// relative for m s in [0.05, 10].
double fourier_bessel_position_propagator(double separation, double mass);

// Composite 16-point Gauss-Legendre rule on geometrically spaced segments;
// a fixed-order reference independent of the adaptive subdivision logic.
double composite_gauss(const std::function<double(double)>& f, double a,
                       double b, int segments);

// Renyi entropy of the phi block from a dense diagonalization of the
// 2V x 2V lattice quadratic form (Eigen).
double dense_lattice_entropy(const fieldent::oracle::LatticeSpec& spec,
                             int alpha);

struct DenseMoments {
  // Position-space second moments between site 0 and site r (1D lattices).
  std::vector<double> phi_phi;
  std::vector<double> pphi_pphi;
  std::vector<double> phi_chi;
};

DenseMoments dense_lattice_moments(const fieldent::oracle::LatticeSpec& spec);

}  // namespace testoracle
