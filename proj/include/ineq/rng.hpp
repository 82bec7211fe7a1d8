#pragma once

#include <cstdint>
#include <random>

namespace ineq {

// mt19937_64 behind fixed output mappings. The standard distributions are
// implementation-defined, so simulation streams go through these instead;
// a given seed produces the same trades on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double u01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n); multiply-shift, bias below n / 2^64.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(eng_()) * n) >> 64);
  }

  // Stream seed for run `index` of a sweep built on `base_seed`.
  static std::uint64_t derive_seed(std::uint64_t base_seed,
                                   std::uint64_t index) {
    return base_seed ^ index;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ineq
