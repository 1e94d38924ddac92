#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace bfman {

// splitmix64 step: advances `s` and returns a finalized 64-bit word.
inline std::uint64_t splitmix64_next(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stateless 64-bit permutation (splitmix64 finalizer) for key derivation.
inline std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic random stream (xoshiro256++ core) with the distribution
// transforms implemented here rather than delegated to <random>, so the
// draw sequence for a given seed is identical across platforms and
// standard-library versions. Every sampler in the codebase consumes one of
// these; identical seed implies identical draw sequence.
class RngStream {
public:
  explicit RngStream(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) w = splitmix64_next(s);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on the open interval (0,1); never returns 0 or 1, so logs and
  // inverse transforms are always finite.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller, one value per call (the sine companion is discarded so the
  // per-draw stream consumption is fixed).
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi * u2);
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  // Marsaglia-Tsang; shape < 1 handled by the boost G(a) = G(a+1) U^{1/a}.
  double gamma(double shape, double rate) {
    if (shape < 1.0) {
      const double u = uniform();
      return gamma(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v / rate;
    }
  }

  double beta(double a, double b) {
    const double x = gamma(a, 1.0);
    const double y = gamma(b, 1.0);
    return x / (x + y);
  }

  // chi distribution with 3 degrees of freedom: sqrt of a chi-square(3).
  double chi3() { return std::sqrt(gamma(1.5, 0.5)); }

private:
  static constexpr double pi = 3.141592653589793238462643383279502884;

  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_;
};

// Hierarchical stream key. Parallel units (chain, sweep, row, subject)
// derive their own keys with child(); the resulting streams are independent
// of execution order and worker count, which is what makes multi-threaded
// runs bit-identical to serial ones.
class RngKey {
public:
  explicit RngKey(std::uint64_t seed) : key_(mix64(seed ^ 0x8f58c946cc1fbd9bULL)) {}

  RngKey child(std::uint64_t tag) const {
    RngKey k(*this);
    k.key_ = mix64(key_ ^ (0x9e3779b97f4a7c15ULL * (tag + 0x632be59bd9b4e019ULL)));
    return k;
  }

  RngStream stream() const { return RngStream(key_); }

private:
  std::uint64_t key_;
};

}  // namespace bfman
