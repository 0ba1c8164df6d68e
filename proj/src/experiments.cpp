#include "smale/experiments.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <vector>

#include "smale/errors.hpp"
#include "smale/parallel.hpp"
#include "smale/sampling.hpp"

namespace smale {

namespace {

// Per-trial statistic: a value to accumulate, or nothing when the trial
// is discarded (path failure).
using Trial = std::function<std::optional<double>(Rng&)>;

ExperimentResult run_trials(std::string kind, const DegreePattern& pattern,
                            std::int64_t trials, std::uint64_t seed,
                            double discard_cap, const Trial& trial, int threads) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::optional<double>> slots(trials);
  parallel_for(trials, threads, [&](std::int64_t i) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(i));
    slots[i] = trial(rng);
  });

  // reduce in trial order so the estimate is independent of scheduling
  double sum = 0.0;
  std::int64_t kept = 0;
  for (const auto& v : slots) {
    if (v) {
      sum += *v;
      ++kept;
    }
  }
  ExperimentResult result(pattern);
  result.kind = std::move(kind);
  result.trials = trials;
  result.seed = seed;
  result.discarded = trials - kept;
  if (kept > 0) {
    result.estimate = sum / static_cast<double>(kept);
    double ssq = 0.0;
    for (const auto& v : slots) {
      if (v) ssq += (*v - result.estimate) * (*v - result.estimate);
    }
    if (kept > 1) {
      result.std_error =
          std::sqrt(ssq / static_cast<double>(kept - 1) / static_cast<double>(kept));
    }
  }
  result.flagged =
      static_cast<double>(result.discarded) > discard_cap * static_cast<double>(trials);
  result.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

double d32(const DegreePattern& pattern) {
  return std::pow(static_cast<double>(pattern.max_degree()), 1.5);
}

std::optional<double> lv_iterations(const PolySystem& f, Rng& rng,
                                    const AlhParams& params) {
  const SolveResult r = lv_solve(f, rng, params);
  if (!r.certified) return std::nullopt;
  return static_cast<double>(r.iterations);
}

}  // namespace

ExperimentResult avg_k(const DegreePattern& pattern, std::int64_t trials,
                       std::uint64_t seed, const AlhParams& params, int threads) {
  if (trials < 30) throw PreconditionError("average-case run needs >= 30 trials");
  ExperimentResult result = run_trials(
      "avg-k", pattern, trials, seed, 0.01,
      [&](Rng& rng) {
        const PolySystem f = sample_standard_gaussian(pattern, rng);
        return lv_iterations(f, rng, params);
      },
      threads);
  result.bound = 3707.0 * d32(pattern) * static_cast<double>(pattern.dimension()) *
                 (pattern.n() + 1);
  result.passed = result.estimate <= *result.bound;
  return result;
}

ExperimentResult smoothed_k(const PolySystem& center, double sigma,
                            std::int64_t trials, std::uint64_t seed,
                            const AlhParams& params, int threads) {
  if (trials < 30) throw PreconditionError("smoothed run needs >= 30 trials");
  if (std::abs(center.norm() - 1.0) > 1e-9) {
    throw PreconditionError("smoothing center must lie on the unit sphere");
  }
  if (!(sigma > 0.0) || sigma > 1.0) {
    throw PreconditionError("smoothing needs 0 < sigma <= 1");
  }
  const DegreePattern& pattern = center.pattern;
  GaussianSpec spec{center, sigma, default_truncation(pattern)};
  ExperimentResult result = run_trials(
      "smoothed-k", pattern, trials, seed, 0.01,
      [&](Rng& rng) {
        const PolySystem f = sample_gaussian(spec, rng);
        return lv_iterations(f, rng, params);
      },
      threads);
  const double dim = static_cast<double>(pattern.dimension());
  result.sigma = sigma;
  result.bound = 3707.0 * d32(pattern) * (dim + std::sqrt(dim / 2.0)) *
                 (pattern.n() + 1) / sigma;
  result.passed = result.estimate <= *result.bound;
  return result;
}

ExperimentResult mu2_expectation(const PolySystem& center, double sigma,
                                 std::int64_t trials, std::uint64_t seed,
                                 const AlhParams& params, int threads) {
  if (trials < 100) throw PreconditionError("mean-square-condition run needs >= 100 trials");
  if (!(sigma > 0.0)) throw PreconditionError("sigma must be positive");
  const DegreePattern& pattern = center.pattern;
  const auto bezout = pattern.bezout_number();
  GaussianSpec spec{center, sigma, std::nullopt};
  ExperimentResult result = run_trials(
      "mu2-expectation", pattern, trials, seed, 0.05,
      [&](Rng& rng) -> std::optional<double> {
        const PolySystem q = sample_gaussian(spec, rng);
        const SolveAllResult all = solve_all(q, params, 1);
        if (!all.all_certified || !all.duplicates.empty() ||
            all.paths.size() != bezout) {
          return std::nullopt;
        }
        std::vector<ProjectivePoint> zeros;
        zeros.reserve(all.paths.size());
        for (const auto& p : all.paths) zeros.push_back(p.zero);
        const ConditionReport report = mu2_and_max(q, zeros);
        return report.mu2 * report.mu2 / q.squared_norm();
      },
      threads);
  result.sigma = sigma;
  result.bound = std::exp(1.0) * (pattern.n() + 1) / (2.0 * sigma * sigma);
  result.passed = result.estimate <= *result.bound;
  return result;
}

ExperimentResult condition_based_k(const PolySystem& f, std::int64_t trials,
                                   std::uint64_t seed, const AlhParams& params,
                                   int threads) {
  if (trials < 2) throw PreconditionError("condition-based run needs >= 2 trials");
  const DegreePattern& pattern = f.pattern;
  PolySystem unit = f;
  const double norm = f.norm();
  if (norm == 0.0) throw PreconditionError("cannot analyze the zero system");
  unit *= 1.0 / norm;

  const SolveAllResult all = solve_all(unit, params, threads);
  if (!all.all_certified) {
    throw PreconditionError("mu_max is not measurable: some path failed");
  }
  std::vector<ProjectivePoint> zeros;
  zeros.reserve(all.paths.size());
  for (const auto& p : all.paths) zeros.push_back(p.zero);
  const double mu_max = mu2_and_max(unit, zeros).mu_max;

  ExperimentResult result = run_trials(
      "condition-based-k", pattern, trials, seed, 0.01,
      [&](Rng& rng) { return lv_iterations(unit, rng, params); }, threads);
  const double d = static_cast<double>(pattern.max_degree());
  result.bound = 157109.0 * d * d * d * static_cast<double>(pattern.dimension()) *
                 (pattern.n() + 1) * mu_max * mu_max;
  result.passed = result.estimate <= *result.bound;
  return result;
}

ExperimentResult md_avg_k(const DegreePattern& pattern, std::int64_t trials,
                          std::uint64_t seed, const AlhParams& params, int threads) {
  if (trials < 30) throw PreconditionError("average-case run needs >= 30 trials");
  ExperimentResult result = run_trials(
      "md-avg-k", pattern, trials, seed, 0.01,
      [&](Rng& rng) -> std::optional<double> {
        const PolySystem f = sample_standard_gaussian(pattern, rng);
        const SolveResult r = md_solve(f, params);
        if (!r.certified) return std::nullopt;
        return static_cast<double>(r.iterations);
      },
      threads);
  const double d = static_cast<double>(pattern.max_degree());
  result.bound = 314217.0 * d * d * d * static_cast<double>(pattern.dimension()) *
                 std::pow(pattern.n() + 1.0, pattern.max_degree() + 1);
  result.passed = result.estimate <= *result.bound;
  return result;
}

ExperimentResult real_zero_mean(const DegreePattern& pattern, std::int64_t trials,
                                std::uint64_t seed, const AlhParams& params,
                                int threads) {
  if (trials < 500) throw PreconditionError("real-zero run needs >= 500 trials");
  if (pattern.max_degree() < 2) {
    throw UnsupportedDegreeError("patterns with max degree 1 are unsupported");
  }
  ExperimentResult result = run_trials(
      "real-zero-mean", pattern, trials, seed, 0.05,
      [&](Rng& rng) -> std::optional<double> {
        const PolySystem f = sample_real_gaussian(pattern, rng);
        const RealZeroCount rz = count_real_zeros(f, params, 1);
        if (!rz.reliable) return std::nullopt;
        return static_cast<double>(rz.count);
      },
      threads);
  result.bound = std::sqrt(static_cast<double>(pattern.bezout_number()));
  result.passed = std::abs(result.estimate - *result.bound) <= 3.0 * result.std_error;
  return result;
}

}  // namespace smale
