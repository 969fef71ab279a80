#include "fieldent/replica.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fieldent/errors.hpp"

namespace fieldent::replica {

namespace {

constexpr double kEightPiOverThree = 8.0 * M_PI / 3.0;

std::function<double(double)> radial_integrand(
    std::vector<prop::RegulatedPropagator> lines) {
  return [lines = std::move(lines)](double s) {
    double prod = s * s * s * s;
    for (const auto& line : lines) prod *= line(s);
    return prod;
  };
}

std::vector<prop::RegulatedPropagator> diagram_lines(const DiagramSpec& d) {
  std::vector<prop::RegulatedPropagator> lines;
  lines.reserve(static_cast<std::size_t>(d.focused_lines + d.traced_lines));
  for (int i = 0; i < d.focused_lines; ++i)
    lines.emplace_back(d.focused_mass, d.regulator);
  for (int i = 0; i < d.traced_lines; ++i)
    lines.emplace_back(d.traced_mass, d.regulator);
  return lines;
}

}  // namespace

bool diagram_survives(const DiagramSpec& d) {
  if (d.focused_lines < 0 || d.traced_lines < 0)
    throw DomainError("line counts must be >= 0");
  if (d.focused_lines + d.traced_lines < 2)
    throw DomainError("a two-vertex diagram needs at least 2 lines");
  if (!std::isfinite(d.coefficient))
    throw DomainError("diagram coefficient must be finite");
  return d.focused_lines >= 1 && d.traced_lines >= 1;
}

std::string diagram_label(const DiagramSpec& d) {
  return std::string(static_cast<std::size_t>(d.focused_lines), 'D') +
         std::string(static_cast<std::size_t>(d.traced_lines), 'K');
}

const Contribution* EntropyResult::find(const std::string& label) const {
  for (const auto& c : contributions)
    if (c.label == label) return &c;
  return nullptr;
}

quad::QuadratureResult discordant_integral(
    std::span<const prop::RegulatedPropagator> lines, double rel_tol) {
  if (lines.size() < 2)
    throw DomainError("discordant integral needs at least 2 lines");
  bool all_massless = true;
  for (const auto& line : lines)
    if (line.physical_mass > 0.0) all_massless = false;
  if (all_massless && lines.size() <= 2)
    throw DivergenceError(
        "two massless lines leave a non-integrable large-separation tail "
        "(s^4 / s^4); at least three lines or a massive line are required");

  auto f = radial_integrand({lines.begin(), lines.end()});
  quad::QuadratureResult r = quad::adaptive_radial(f, 0.0, rel_tol);
  r.value *= kEightPiOverThree;
  r.error *= kEightPiOverThree;
  return r;
}

Contribution evaluate_diagram(const DiagramSpec& d, model::RenyiIndex alpha,
                              double rel_tol) {
  Contribution c;
  c.label = diagram_label(d);
  if (!diagram_survives(d)) {
    // Identical contributions to alpha W_1 and W_alpha: exact zero.
    c.value = 0.0;
    c.error = 0.0;
    return c;
  }
  auto lines = diagram_lines(d);
  quad::QuadratureResult integral = discordant_integral(lines, rel_tol);
  c.value = d.coefficient * alpha.prefactor() * integral.value;
  c.error = std::abs(d.coefficient) * alpha.prefactor() * integral.error;
  return c;
}

EntropyResult renyi_cubic(model::RenyiIndex alpha, double coupling, double vev,
                          double mass, double cutoff, double rel_tol) {
  if (coupling < 0.0) throw DomainError("coupling must be >= 0");
  if (vev < 0.0) throw DomainError("vev must be >= 0");
  if (mass < 0.0) throw DomainError("mass must be >= 0");
  if (cutoff <= 0.0) throw DomainError("cutoff must be positive");
  if (mass > 0.0 && cutoff < 2.0 * mass)
    throw DomainError("cutoff/mass must be >= 2");

  DiagramSpec d{1, 2, coupling * coupling * vev * vev, mass, mass, cutoff};
  EntropyResult res;
  res.alpha = alpha.alpha;
  res.cutoff = cutoff;
  res.contributions.push_back(evaluate_diagram(d, alpha, rel_tol));
  res.value_per_volume = res.contributions[0].value;
  res.error = res.contributions[0].error;
  return res;
}

EntropyResult renyi_unbroken(model::RenyiIndex alpha,
                             const model::FieldTheory& theory,
                             double rel_tol) {
  theory.validate();
  if (theory.phase != model::Phase::Unbroken)
    throw DomainError("renyi_unbroken requires the unbroken phase");

  // Per traced species the diagram carries lambda^2/2; the N-1 species
  // contribute independently, so the multiplicity scales the finished
  // per-species value (kept exact in floating point).
  DiagramSpec d{2, 2, 0.5 * theory.coupling * theory.coupling, theory.mass,
                theory.mass, theory.cutoff};
  Contribution per_species = evaluate_diagram(d, alpha, rel_tol);
  const double species = static_cast<double>(theory.n_fields - 1);
  per_species.value = species * per_species.value;
  per_species.error = species * per_species.error;

  EntropyResult res;
  res.alpha = alpha.alpha;
  res.cutoff = theory.cutoff;
  res.contributions.push_back(std::move(per_species));
  res.value_per_volume = res.contributions[0].value;
  res.error = res.contributions[0].error;
  return res;
}

namespace {

double momentum_kernel(const quad::Vec4& p, double mass_sq) {
  const double p0_sq = p[0] * p[0];
  const double pvec_sq = p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
  const double p_sq = p0_sq + pvec_sq;
  const double denom =
      std::sqrt(pvec_sq + mass_sq) * (p_sq + mass_sq) * (p_sq + mass_sq);
  return (pvec_sq - p0_sq + mass_sq) / denom;
}

}  // namespace

EntropyResult xcheck_momentum(model::RenyiIndex alpha,
                              const model::FieldTheory& theory,
                              const XcheckOptions& opt) {
  theory.validate();
  if (theory.phase != model::Phase::Unbroken)
    throw DomainError("xcheck_momentum requires the unbroken phase");
  if (opt.samples < 100000)
    throw DomainError("xcheck_momentum requires at least 1e5 samples");

  EntropyResult res;
  res.alpha = alpha.alpha;
  res.cutoff = theory.cutoff;
  res.seed = opt.seed;
  res.samples = opt.samples;
  res.threads = opt.threads;

  if (theory.coupling == 0.0) {
    res.contributions.push_back({"DDKK", 0.0, 0.0});
    return res;
  }

  const double m_sq = theory.mass * theory.mass;
  const double reg = theory.cutoff;
  const double reg_sq = reg * reg;
  const double sigma =
      opt.sampler_scale > 0.0 ? opt.sampler_scale : 0.5 * theory.cutoff;
  // The kernel peaks sharply where the three momenta nearly cancel; a
  // second sampling channel draws the total directly at that scale.
  const double sigma_total =
      theory.mass > 0.0 ? theory.mass : 0.05 * theory.cutoff;
  const double two_pi_pow12 = std::pow(2.0 * M_PI, 12);

  // Isotropic 4-momentum density ~ 1/(q^2 (q^2 + scale^2)^{3/2}): the 1/q^2
  // core absorbs massless poles, the q^{-5} tail keeps PV-subtracted
  // weights square-integrable.
  auto density_at = [](double q_sq, double scale) {
    const double t = q_sq + scale * scale;
    return scale / (2.0 * M_PI * M_PI * q_sq * t * std::sqrt(t));
  };
  auto sample_vec = [density_at](quad::BlockRng& rng, double scale,
                                 quad::Vec4& q, double& q_sq, double& pdf) {
    const double u = rng.uniform();
    const double inv = 1.0 / (1.0 - u);
    const double radius = scale * std::sqrt(inv * inv - 1.0);
    auto [g0, g1] = rng.normal_pair();
    auto [g2, g3] = rng.normal_pair();
    double norm = std::sqrt(g0 * g0 + g1 * g1 + g2 * g2 + g3 * g3);
    if (norm == 0.0) norm = 1.0;
    const double s = radius / norm;
    q = {g0 * s, g1 * s, g2 * s, g3 * s};
    q_sq = radius * radius;
    pdf = density_at(q_sq, scale);
  };

  auto pv_line = [m_sq, reg_sq](double q_sq) {
    return 1.0 / (q_sq + m_sq) - 1.0 / (q_sq + reg_sq);
  };

  auto one_sample = [&](quad::BlockRng& rng) -> double {
    quad::Vec4 p, k, l;
    double p_sq, k_sq, l_sq, pdf_p, pdf_k, pdf_l;
    sample_vec(rng, sigma, p, p_sq, pdf_p);
    sample_vec(rng, sigma, k, k_sq, pdf_k);
    quad::Vec4 total;
    const bool small_total_channel = rng.uniform() < 0.5;
    if (small_total_channel) {
      double total_sq, pdf_total;
      sample_vec(rng, sigma_total, total, total_sq, pdf_total);
      for (int i = 0; i < 4; ++i) l[i] = total[i] - p[i] - k[i];
      l_sq = l[0] * l[0] + l[1] * l[1] + l[2] * l[2] + l[3] * l[3];
    } else {
      sample_vec(rng, sigma, l, l_sq, pdf_l);
      for (int i = 0; i < 4; ++i) total[i] = p[i] + k[i] + l[i];
    }
    const double total_sq = total[0] * total[0] + total[1] * total[1] +
                            total[2] * total[2] + total[3] * total[3];
    // Mixture density over both channels (unit Jacobian between l and the
    // total at fixed p, k).
    const double mix = 0.5 * density_at(l_sq, sigma) +
                       0.5 * density_at(total_sq, sigma_total);
    const double kernel_pv =
        momentum_kernel(total, m_sq) - momentum_kernel(total, reg_sq);
    const double val = pv_line(p_sq) * pv_line(k_sq) * pv_line(l_sq) * kernel_pv;
    return val / (two_pi_pow12 * pdf_p * pdf_k * mix);
  };

  quad::QuadratureResult integral =
      quad::mc_blocked(opt.samples, opt.seed, opt.threads, one_sample);
  if (integral.error > opt.target_rel * std::abs(integral.value)) {
    std::ostringstream os;
    os << "momentum Monte Carlo missed the requested relative precision "
       << opt.target_rel << " (estimate " << integral.value << " +- "
       << integral.error << " after " << opt.samples << " samples)";
    throw PrecisionError(os.str());
  }

  Contribution c;
  c.label = "DDKK";
  c.value = 0.5 * theory.coupling * theory.coupling * alpha.prefactor() *
            integral.value;
  c.error = 0.5 * theory.coupling * theory.coupling * alpha.prefactor() *
            integral.error;
  const double species = static_cast<double>(theory.n_fields - 1);
  c.value = species * c.value;
  c.error = species * c.error;

  res.contributions.push_back(std::move(c));
  res.value_per_volume = res.contributions[0].value;
  res.error = res.contributions[0].error;
  return res;
}

namespace {

EntropyResult renyi_ssb_impl(model::RenyiIndex alpha,
                             const model::FieldTheory& theory, double lambda_u,
                             double c_t, double rel_tol, bool pi_variant) {
  theory.validate();
  if (theory.phase != model::Phase::Broken)
    throw DomainError("the SSB entropy requires the broken phase");
  model::SsbParameters ssb = model::ssb_parameters(theory, lambda_u, c_t);

  const double species = static_cast<double>(theory.n_fields - 1);
  const double lam_sq = lambda_u * lambda_u;
  const double u_sq = ssb.shift_scale * ssb.shift_scale;

  // Quartic-vertex family, same as the unbroken phase but with the
  // effective masses.
  DiagramSpec quartic{2, 2, 0.5 * lam_sq, ssb.m_sigma_eff, ssb.m_pi_eff,
                      theory.cutoff};
  Contribution ddkk = evaluate_diagram(quartic, alpha, rel_tol);
  ddkk.value = species * ddkk.value;
  ddkk.error = species * ddkk.error;

  // Shift-induced cubic family; the focused entropy carries the species
  // multiplicity, the traced-species entropy does not.
  DiagramSpec cubic{1, 2, lam_sq * u_sq, ssb.m_sigma_eff, ssb.m_pi_eff,
                    theory.cutoff};
  Contribution dkk = evaluate_diagram(cubic, alpha, rel_tol);
  const double group_factor = pi_variant ? 1.0 : species;
  dkk.value = group_factor * dkk.value;
  dkk.error = group_factor * dkk.error;

  EntropyResult res;
  res.alpha = alpha.alpha;
  res.cutoff = theory.cutoff;
  res.value_per_volume = ddkk.value + dkk.value;
  res.error = std::hypot(ddkk.error, dkk.error);
  res.contributions.push_back(std::move(ddkk));
  res.contributions.push_back(std::move(dkk));
  return res;
}

}  // namespace

EntropyResult renyi_ssb(model::RenyiIndex alpha,
                        const model::FieldTheory& theory, double lambda_u,
                        double c_t, double rel_tol) {
  return renyi_ssb_impl(alpha, theory, lambda_u, c_t, rel_tol, false);
}

EntropyResult renyi_ssb_pi(model::RenyiIndex alpha,
                           const model::FieldTheory& theory, double lambda_u,
                           double c_t, double rel_tol) {
  return renyi_ssb_impl(alpha, theory, lambda_u, c_t, rel_tol, true);
}

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points) {
  if (points.size() < 4)
    throw DomainError("power-law fit needs at least 4 points");
  std::vector<double> lx, ly;
  lx.reserve(points.size());
  ly.reserve(points.size());
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0))
      throw DomainError("power-law fit needs positive coordinates");
    lx.push_back(std::log(x));
    ly.push_back(std::log(y));
  }
  const double n = static_cast<double>(points.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw DomainError("power-law fit needs spread in x");
  PowerLawFit fit;
  fit.exponent = sxy / sxx;
  const double intercept = my - fit.exponent * mx;
  fit.prefactor = std::exp(intercept);
  double ss = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (intercept + fit.exponent * lx[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

double short_range_fraction(std::span<const prop::RegulatedPropagator> lines,
                            double range, double rel_tol) {
  if (!(range > 0.0)) throw DomainError("range must be positive");
  if (lines.empty()) throw DomainError("at least one line required");

  auto f = radial_integrand({lines.begin(), lines.end()});
  quad::QuadratureResult full = quad::adaptive_radial(f, 0.0, rel_tol);
  if (!(full.value > 0.0))
    throw IntegrationError("radial integral vanished; fraction undefined");
  quad::QuadratureResult tail = quad::adaptive_radial(f, range, rel_tol);
  return std::clamp(tail.value / full.value, 0.0, 1.0);
}

}  // namespace fieldent::replica
