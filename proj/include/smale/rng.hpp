#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace smale {

// splitmix64 finalizer; good avalanche, used to derive substream seeds.
std::uint64_t mix64(std::uint64_t x);

// Deterministic random source. Uniform bits come from std::mt19937_64,
// whose output is fully specified by the standard; normal variates use
// Box-Muller on those bits, so identical seeds give identical streams on
// every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Substream `index` of a master seed. Distinct (master, index) pairs
  // yield statistically independent streams.
  static Rng substream(std::uint64_t master_seed, std::uint64_t index);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64();
  double uniform();                       // [0, 1)
  double normal();                        // N(0, 1)
  std::complex<double> normal_complex();  // re, im i.i.d. N(0, 1)
  double uniform_angle();                 // [0, 2*pi)

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace smale
