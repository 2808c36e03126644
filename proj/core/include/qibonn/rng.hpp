#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace qibonn {

/// Deterministic random source used throughout the library.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard)
/// and derives all variates from raw 64-bit draws, so streams are
/// bit-reproducible across compilers and standard libraries. Substreams are
/// derived with a splitmix64 mix of (seed, stream index); every particle,
/// repeat and objective evaluation owns its own substream, which makes runs
/// reproducible under any evaluation schedule.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// splitmix64-mixed child seed for substream `stream` of `seed`.
  static std::uint64_t child_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static Rng child(std::uint64_t seed, std::uint64_t stream) {
    return Rng(child_seed(seed, stream));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform double in (0, 1]; safe as a log argument.
  double uniform_open0() { return 1.0 - uniform(); }

  /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
  std::uint64_t uniform_int(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  bool bernoulli(double p) { return uniform() < p; }

  /// Standard normal via Box-Muller on two uniform draws.
  double normal() {
    const double u1 = uniform_open0();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  /// Fisher-Yates shuffle (std::shuffle's walk order is unspecified).
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qibonn
