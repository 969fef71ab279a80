#include <cmath>

#include "fieldent/errors.hpp"
#include "fieldent/quad.hpp"

namespace fieldent::quad {

namespace {

// Importance density for one non-negative coordinate: an equal mixture of an
// exponential matched to the physical decay and a Lomax (shape 1/2) tail
// that keeps weights square-integrable for power-law integrands.
constexpr double kLomaxShape = 0.5;

struct MixtureCoord {
  double scale;  // exponential scale
  double tail;   // Lomax scale

  double sample(BlockRng& rng) const {
    if (rng.uniform() < 0.5) return -scale * std::log(rng.uniform());
    const double u = rng.uniform();
    return tail * (std::pow(u, -1.0 / kLomaxShape) - 1.0);
  }
  double pdf(double t) const {
    const double p_exp = std::exp(-t / scale) / scale;
    const double p_tail =
        (kLomaxShape / tail) * std::pow(1.0 + t / tail, -(kLomaxShape + 1.0));
    return 0.5 * p_exp + 0.5 * p_tail;
  }
};

// Radial coordinate: Gamma(3, scale) bulk (so the r^2 measure is built in)
// mixed with the same Lomax tail.
struct MixtureRadial {
  double scale;
  double tail;

  double sample(BlockRng& rng) const {
    if (rng.uniform() < 0.5)
      return -scale *
             std::log(rng.uniform() * rng.uniform() * rng.uniform());
    const double u = rng.uniform();
    return tail * (std::pow(u, -1.0 / kLomaxShape) - 1.0);
  }
  double pdf(double r) const {
    const double p_gamma =
        r * r * std::exp(-r / scale) / (2.0 * scale * scale * scale);
    const double p_tail =
        (kLomaxShape / tail) * std::pow(1.0 + r / tail, -(kLomaxShape + 1.0));
    return 0.5 * p_gamma + 0.5 * p_tail;
  }
};

}  // namespace

QuadratureResult mc_halfspaces(
    const std::function<double(const Vec4&, const Vec4&)>& f,
    const HalfspaceOptions& opt) {
  if (opt.samples < 2) throw DomainError("at least 2 samples required");
  if (!(opt.sampler_scale > 0.0))
    throw DomainError("sampler_scale must be positive");
  if (!(opt.tail_scale > 0.0))
    throw DomainError("tail_scale must be positive");

  const MixtureCoord time_density{opt.sampler_scale, opt.tail_scale};
  const MixtureRadial radial_density{opt.sampler_scale, opt.tail_scale};

  auto one_sample = [&](BlockRng& rng) -> double {
    const double t1 = time_density.sample(rng);
    const double t2 = time_density.sample(rng);
    const double r = radial_density.sample(rng);
    // Isotropic direction for the spatial separation.
    const double z = 1.0 - 2.0 * rng.uniform();
    const double phi = 2.0 * M_PI * rng.uniform();
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const Vec4 x{t1, 0.0, 0.0, 0.0};
    const Vec4 y{-t2, -r * rho * std::cos(phi), -r * rho * std::sin(phi),
                 -r * z};
    const double density =
        time_density.pdf(t1) * time_density.pdf(t2) * radial_density.pdf(r);
    // Factor 2: both orderings of the discordant pair.
    return 2.0 * f(x, y) * 4.0 * M_PI * r * r / density;
  };

  QuadratureResult res =
      mc_blocked(opt.samples, opt.seed, opt.threads, one_sample);
  res.converged =
      res.error <= opt.target_rel * std::abs(res.value) || res.error == 0.0;
  return res;
}

QuadratureResult mc_halfspaces(
    const std::function<double(const Vec4&, const Vec4&)>& f,
    double sampler_scale, long long samples, std::uint64_t seed) {
  HalfspaceOptions opt;
  opt.sampler_scale = sampler_scale;
  opt.tail_scale = sampler_scale;
  opt.samples = samples;
  opt.seed = seed;
  return mc_halfspaces(f, opt);
}

}  // namespace fieldent::quad
