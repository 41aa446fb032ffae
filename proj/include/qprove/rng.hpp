#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "qprove/core.hpp"

namespace qprove {

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Independent per-trial seed from (master seed, trial index).  Adjacent
// indices land far apart in the mt19937_64 seed space.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master + 0x9e3779b97f4a7c15ULL * (index + 1));
}

// Deterministic sampling stream.  Doubles come from an explicit 53-bit
// mapping instead of std::uniform_real_distribution, whose output the
// standard leaves implementation-defined; same reason for the hand-rolled
// Box-Muller below.  Identical seed => identical stream, byte for byte.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // uniform in [0, 1)
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // real and imaginary parts independent N(0,1); callers normalize, so the
  // overall scale washes out
  Complex complex_gaussian() {
    double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    return {r * std::cos(2.0 * kPi * u2), r * std::sin(2.0 * kPi * u2)};
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace qprove
