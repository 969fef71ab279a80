#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "fieldent/errors.hpp"
#include "fieldent/quad.hpp"

namespace fieldent::quad {

namespace {

// Gauss-Kronrod (G7, K15) nodes and weights on [-1, 1] (QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GkEstimate {
  double value;
  double error;
};

GkEstimate gauss_kronrod_15(const std::function<double(double)>& f, double a,
                            double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(center - half * kXgk[i]);
    fv[14 - i] = f(center + half * kXgk[i]);
  }
  fv[7] = f(center);

  double kronrod = kWgk[7] * fv[7];
  double gauss = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    kronrod += kWgk[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
  }
  kronrod *= half;
  gauss *= half;

  // QUADPACK-style sharpened error estimate.
  double resabs = 0.0;
  for (int i = 0; i < 7; ++i) resabs += kWgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
  resabs = (resabs + kWgk[7] * std::abs(fv[7])) * std::abs(half);
  double err = std::abs(kronrod - gauss);
  if (resabs > 0.0 && err > 0.0)
    err = resabs * std::min(1.0, std::pow(200.0 * err / resabs, 1.5));
  return {kronrod, err};
}

struct Interval {
  double a, b, value, error;
  long long id;  // deterministic tie-break
};

struct ByError {
  bool operator()(const Interval& x, const Interval& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.id > y.id;
  }
};

}  // namespace

QuadratureResult adaptive_radial(const std::function<double(double)>& f,
                                 double lower, const RadialOptions& opt) {
  if (lower < 0.0) throw DomainError("lower bound must be >= 0");
  if (opt.rel_tol < 1e-12 || opt.rel_tol > 1e-2)
    throw DomainError("relative tolerance must lie in [1e-12, 1e-2]");

  long long evals = 0;
  auto eval = [&](double s) {
    ++evals;
    return f(s);
  };

  // Scan a geometric grid to locate the support of the integrand and the
  // point where the tail has dropped below tail_drop * peak.
  constexpr double kGridLo = 1e-12;
  constexpr double kGridHi = 1e12;
  constexpr int kPerDecade = 8;
  const double ratio = std::pow(10.0, 1.0 / kPerDecade);

  std::vector<double> grid;
  std::vector<double> mag;
  double s = std::max(lower, kGridLo);
  if (s == 0.0) s = kGridLo;
  for (; s <= kGridHi * (1.0 + 1e-9); s *= ratio) {
    grid.push_back(s);
    mag.push_back(std::abs(eval(s)));
  }
  double peak = 0.0;
  for (double m : mag) peak = std::max(peak, m);
  if (peak == 0.0) {
    // Identically zero (to probe resolution): nothing to integrate.
    return {0.0, 0.0, evals, true};
  }
  const double floor_mag = opt.tail_drop * peak;

  std::size_t last = mag.size();
  while (last > 0 && mag[last - 1] < floor_mag) --last;
  if (last == mag.size())
    throw DivergenceError(
        "integrand does not decay within the truncation window; the radial "
        "integral appears divergent");
  std::size_t first = 0;
  while (first + 1 < last && mag[first] < floor_mag) ++first;

  double a0 = (first == 0) ? lower : grid[first - 1];
  if (a0 < lower) a0 = lower;
  double b0 = grid[last];  // one grid step beyond the last live probe

  // Seed the worklist with one interval per decade across the live window.
  std::vector<double> bounds;
  bounds.push_back(a0);
  for (double d = std::pow(10.0, std::ceil(std::log10(grid[first]))); d < b0;
       d *= 10.0)
    if (d > a0) bounds.push_back(d);
  bounds.push_back(b0);

  std::priority_queue<Interval, std::vector<Interval>, ByError> heap;
  long long next_id = 0;
  double total = 0.0, total_err = 0.0;
  int n_intervals = 0;
  auto push = [&](double a, double b) {
    GkEstimate e = gauss_kronrod_15(f, a, b);
    evals += 15;
    heap.push({a, b, e.value, e.error, next_id++});
    total += e.value;
    total_err += e.error;
    ++n_intervals;
  };
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
    push(bounds[i], bounds[i + 1]);

  auto target = [&] {
    return std::max(opt.rel_tol * std::abs(total), opt.abs_floor);
  };
  while (total_err > target()) {
    if (n_intervals >= opt.max_intervals) {
      std::ostringstream os;
      os << "adaptive quadrature did not reach tolerance " << opt.rel_tol
         << " within " << opt.max_intervals << " intervals (error estimate "
         << total_err << ", value " << total << ")";
      throw IntegrationError(os.str());
    }
    Interval worst = heap.top();
    heap.pop();
    total -= worst.value;
    total_err -= worst.error;
    --n_intervals;
    const double mid = 0.5 * (worst.a + worst.b);
    push(worst.a, mid);
    push(mid, worst.b);
  }

  return {total, total_err, evals, true};
}

QuadratureResult adaptive_radial(const std::function<double(double)>& f,
                                 double lower, double rel_tol) {
  RadialOptions opt;
  opt.rel_tol = rel_tol;
  return adaptive_radial(f, lower, opt);
}

}  // namespace fieldent::quad
