#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace geoflux {

// splitmix64 mixer (Steele, Lea, Flood 2014). Used to derive independent
// per-replicate seeds from (master seed, replicate index).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 1));
}

// Seeded generator with hand-rolled distributions. mt19937_64 output is
// pinned by the standard, and none of the std::*_distribution adapters are,
// so every draw here is reproducible across platforms and library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller; one fresh pair per call, cached second value discarded to
  // keep the stream position a pure function of the call count.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  // Fisher-Yates over [0, n) index vectors.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_u64() % i);
      std::swap(v[i - 1], v[j]);
    }
  }

  // Poisson draw. Inversion by sequential search for lambda < 10, PTRS
  // transformed rejection (Hormann 1993) above. Both branches consume a
  // deterministic uniform stream, so samples are reproducible everywhere.
  std::uint64_t poisson(double lambda) {
    if (lambda < 0.0 || !std::isfinite(lambda))
      throw std::invalid_argument("poisson: bad lambda");
    if (lambda == 0.0) return 0;
    if (lambda < 10.0) return poisson_inversion(lambda);
    return poisson_ptrs(lambda);
  }

 private:
  std::uint64_t poisson_inversion(double lambda) {
    double p = std::exp(-lambda);
    double cum = p;
    double u = uniform();
    std::uint64_t k = 0;
    while (u > cum) {
      ++k;
      p *= lambda / static_cast<double>(k);
      cum += p;
      if (k > 10000) break;  // cum saturated by rounding; tail mass ~0
    }
    return k;
  }

  std::uint64_t poisson_ptrs(double lambda) {
    const double slam = std::sqrt(lambda);
    const double loglam = std::log(lambda);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
      double u = uniform() - 0.5;
      double v = uniform();
      double us = 0.5 - std::fabs(u);
      double k = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
      if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
      if (k < 0.0 || (us < 0.013 && v > us)) continue;
      if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
          k * loglam - lambda - std::lgamma(k + 1.0))
        return static_cast<std::uint64_t>(k);
    }
  }

  std::mt19937_64 eng_;
};

}  // namespace geoflux
