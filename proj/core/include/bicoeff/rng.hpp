#pragma once

#include <cstdint>
#include <complex>

namespace bicoeff {

// Small counter-free generator (splitmix64). We deliberately avoid the
// standard distributions: their output is implementation-defined, and the
// reports produced by this project promise byte-identical reruns for a fixed
// seed. A 64-bit mix is plenty for sampling test points; nothing here needs
// cryptographic or equidistribution guarantees.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform point on the unit circle.
  std::complex<double> unit_circle() {
    const double t = 6.283185307179586476925286766559 * uniform();
    return {std::cos(t), std::sin(t)};
  }

 private:
  std::uint64_t state_;
};

// Decorrelates per-candidate streams: candidate i of a run seeded with s uses
// Rng(derive_seed(s, i)). Order-independent, so parallel evaluation of the
// candidate list cannot change any draw.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ull * (index + 1));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace bicoeff
