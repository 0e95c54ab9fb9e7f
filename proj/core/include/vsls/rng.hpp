#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace vsls {

// Deterministic PRNG with explicit distribution code so that streams are
// reproducible independent of the standard library implementation.
// Child streams derived via split() are statistically independent and keyed
// by a tag, which keeps per-purpose draws (goal sampling, noise, minibatch
// indices, ...) decoupled from each other.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {
    // run the mixer a few times so that small seeds diverge immediately
    next_u64();
    next_u64();
  }

  uint64_t next_u64() {
    // splitmix64
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n)
  int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<uint64_t>(n)); }

  // standard normal via Box-Muller (spare cached)
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 <= 1e-300) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  double normal(double mean, double std) { return mean + std * normal(); }

  // independent child stream keyed by tag
  Rng split(std::string_view tag) const {
    uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
    for (char c : tag) {
      h ^= static_cast<uint64_t>(static_cast<unsigned char>(c));
      h *= 0x100000001b3ull;
    }
    return Rng(state_ ^ h);
  }

  Rng split(uint64_t salt) const { return Rng(state_ ^ (salt * 0x9e3779b97f4a7c15ull + 0x165667b19e3779f9ull)); }

 private:
  uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace vsls
