#pragma once

#include <optional>
#include <string>

#include "smale/solvers.hpp"

namespace smale {

// One Monte Carlo estimate with the bound it is checked against. All
// randomness derives from `seed` through per-trial substreams, so results
// are reproducible bit for bit at any worker count.
struct ExperimentResult {
  explicit ExperimentResult(DegreePattern pattern) : pattern(std::move(pattern)) {}

  std::string kind;
  DegreePattern pattern;
  std::int64_t trials = 0;
  double estimate = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(kept trials)
  std::optional<double> bound;
  bool passed = false;
  std::uint64_t seed = 0;
  double wall_time = 0.0;  // seconds
  std::int64_t discarded = 0;
  bool flagged = false;  // too many discarded trials
  std::optional<double> sigma;
};

// Mean LV iteration count over standard Gaussian inputs, against
//   3707 D^{3/2} N (n+1).
ExperimentResult avg_k(const DegreePattern& pattern, std::int64_t trials,
                       std::uint64_t seed, const AlhParams& params = {},
                       int threads = 0);

// Mean LV iteration count over the truncated Gaussian centered at a unit
// system, against 3707 D^{3/2} (N + 2^{-1/2} sqrt(N)) (n+1) / sigma.
ExperimentResult smoothed_k(const PolySystem& center, double sigma,
                            std::int64_t trials, std::uint64_t seed,
                            const AlhParams& params = {}, int threads = 0);

// Mean of mu_2^2(q) / ||q||^2 over Gaussian q, against e (n+1) / (2 sigma^2).
ExperimentResult mu2_expectation(const PolySystem& center, double sigma,
                                 std::int64_t trials, std::uint64_t seed,
                                 const AlhParams& params = {}, int threads = 0);

// Mean LV iteration count on one fixed input over random start pairs,
// against 157109 D^3 N (n+1) mu_max^2(f) with mu_max measured up front.
ExperimentResult condition_based_k(const PolySystem& f, std::int64_t trials,
                                   std::uint64_t seed, const AlhParams& params = {},
                                   int threads = 0);

// Mean deterministic-solver iteration count over standard Gaussian inputs,
// against 314217 D^3 N (n+1)^{D+1}.
ExperimentResult md_avg_k(const DegreePattern& pattern, std::int64_t trials,
                          std::uint64_t seed, const AlhParams& params = {},
                          int threads = 0);

// Mean count of real projective zeros of real Gaussian systems. This is
// an equality test: passed iff |estimate - sqrt(bezout)| <= 3 std errors.
ExperimentResult real_zero_mean(const DegreePattern& pattern, std::int64_t trials,
                                std::uint64_t seed, const AlhParams& params = {},
                                int threads = 0);

}  // namespace smale
