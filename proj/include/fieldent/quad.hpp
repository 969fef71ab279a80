#pragma once

#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <thread>
#include <vector>

namespace fieldent::quad {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  long long evaluations = 0;
  bool converged = false;
};

struct RadialOptions {
  double rel_tol = 1e-8;
  double abs_floor = 0.0;
  int max_intervals = 20000;
  // Truncate the domain where |f| drops below tail_drop * peak.
  double tail_drop = 1e-16;
};

// Adaptive Gauss-Kronrod (G7,K15) quadrature of f on (lower, infinity) for
// integrands that decay in the tail. The domain is truncated automatically
// by scanning a geometric grid; throws IntegrationError if the budget is
// exhausted, DivergenceError if the integrand does not decay at all.
QuadratureResult adaptive_radial(const std::function<double(double)>& f,
                                 double lower, const RadialOptions& opt);
QuadratureResult adaptive_radial(const std::function<double(double)>& f,
                                 double lower, double rel_tol = 1e-8);

// ---------------------------------------------------------------------------
// Seeded Monte Carlo.
//
// Reproducibility contract: all estimators consume randomness through
// per-block generators keyed on (seed, block index) and combine block sums
// in index order, so results are bitwise identical for a fixed seed
// regardless of the number of worker threads.
// ---------------------------------------------------------------------------

class BlockRng {
 public:
  BlockRng(std::uint64_t seed, std::uint64_t stream)
      : gen_(mix(seed, stream)) {}

  // Uniform in the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }
  double exponential(double scale) { return -scale * std::log(uniform()); }
  // Unit standard normals, Box-Muller pair.
  std::pair<double, double> normal_pair() {
    double u1 = uniform(), u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    return {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
  }

 private:
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    // splitmix64 step over the combined key
    std::uint64_t z = a + 0x9E3779B97F4A7C15ull * (b + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  std::mt19937_64 gen_;
};

inline constexpr long long kMcBlockSize = 8192;

// Blocked mean estimator: fn(rng) yields one weighted sample. Deterministic
// for fixed (seed, samples) independent of thread count.
template <class SampleFn>
QuadratureResult mc_blocked(long long samples, std::uint64_t seed, int threads,
                            SampleFn&& fn) {
  const long long n_blocks = (samples + kMcBlockSize - 1) / kMcBlockSize;
  std::vector<double> sums(static_cast<std::size_t>(n_blocks), 0.0);
  std::vector<double> sumsqs(static_cast<std::size_t>(n_blocks), 0.0);

  auto run_block = [&](long long b) {
    BlockRng rng(seed, static_cast<std::uint64_t>(b));
    const long long lo = b * kMcBlockSize;
    const long long hi = std::min(samples, lo + kMcBlockSize);
    double s = 0.0, s2 = 0.0;
    for (long long i = lo; i < hi; ++i) {
      double w = fn(rng);
      s += w;
      s2 += w * w;
    }
    sums[static_cast<std::size_t>(b)] = s;
    sumsqs[static_cast<std::size_t>(b)] = s2;
  };

  if (threads <= 1 || n_blocks == 1) {
    for (long long b = 0; b < n_blocks; ++b) run_block(b);
  } else {
    std::atomic<long long> next{0};
    auto worker = [&] {
      for (;;) {
        long long b = next.fetch_add(1);
        if (b >= n_blocks) return;
        run_block(b);
      }
    };
    int n_workers = std::min<long long>(threads, n_blocks);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  double sum = 0.0, sumsq = 0.0;
  for (long long b = 0; b < n_blocks; ++b) {
    sum += sums[static_cast<std::size_t>(b)];
    sumsq += sumsqs[static_cast<std::size_t>(b)];
  }
  const double n = static_cast<double>(samples);
  QuadratureResult out;
  out.value = sum / n;
  double var = 0.0;
  if (samples > 1) {
    var = (sumsq - n * out.value * out.value) / (n - 1.0);
    if (var < 0.0) var = 0.0;
  }
  out.error = std::sqrt(var / n);
  out.evaluations = samples;
  out.converged = true;
  return out;
}

using Vec4 = std::array<double, 4>;

struct HalfspaceOptions {
  // Length scale of the exponential part of the importance density;
  // set to roughly 1 / (lightest physical mass in the integrand).
  double sampler_scale = 1.0;
  // Scale of the heavy-tail (Lomax, shape 1/2) part that keeps weights
  // bounded for power-law integrands.
  double tail_scale = 0.1;
  long long samples = 1'000'000;
  std::uint64_t seed = 1;
  int threads = 1;
  double target_rel = 1e-3;
};

// Direct Monte Carlo estimate of
//   2 * int_{tau_x>0} d4x int_{tau_y<0} d4y f(x, y)   per unit 3-volume
// for integrands depending on x - y only. Sampling happens in relative
// coordinates (t1, t2, r); no radial reduction of the domain is used, so
// this serves as an independent oracle for discordant_integral.
QuadratureResult mc_halfspaces(
    const std::function<double(const Vec4&, const Vec4&)>& f,
    const HalfspaceOptions& opt);
QuadratureResult mc_halfspaces(
    const std::function<double(const Vec4&, const Vec4&)>& f,
    double sampler_scale, long long samples, std::uint64_t seed);

}  // namespace fieldent::quad
