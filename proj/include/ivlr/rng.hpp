#pragma once

#include <cmath>
#include <cstdint>

namespace ivlr {

// Deterministic splitmix64 generator with hand-rolled uniform / normal draws.
// Byte-identical streams across platforms; std::* distributions are avoided
// so that replay hashes are stable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n)
  std::uint64_t uniform_int(std::uint64_t n) { return next_u64() % n; }

  // standard normal via Box-Muller (one value per call, no caching)
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  double normal(double mean, double sigma) { return mean + sigma * normal(); }

  // Independent child stream keyed by a tag; used so that parallel episodes
  // and per-purpose draws never share a stream.
  Rng fork(std::uint64_t tag) const {
    std::uint64_t mixed = state_ ^ (0x9e3779b97f4a7c15ULL * (tag + 0x632be59bd9b4e019ULL));
    mixed = (mixed ^ (mixed >> 30)) * 0xbf58476d1ce4e5b9ULL;
    return Rng(mixed ^ (mixed >> 27));
  }

 private:
  std::uint64_t state_;
};

}  // namespace ivlr
