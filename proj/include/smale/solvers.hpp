#pragma once

#include <optional>
#include <utility>

#include "smale/homotopy.hpp"
#include "smale/rng.hpp"

namespace smale {

// Output of one solver run. `zero` is the Newton-polished zero; `certified`
// states that the raw path endpoint passed the gamma criterion against it
// and that the polished residual is at most 1e-8. Runs that fail report
// certified = false with the failure in `outcome`.
struct SolveResult {
  ProjectivePoint zero;
  std::int64_t iterations = 0;
  double residual = 0.0;  // ||f(zero)|| / ||f||
  bool certified = false;
  double mu_final = 0.0;  // mu_norm at the polished zero
  PathOutcome outcome = PathOutcome::success;
  std::optional<std::uint64_t> seed;  // randomized runs only
  std::optional<PathTrace> trace;
};

struct StartSystem {
  PolySystem system;                  // unit norm
  std::vector<ProjectivePoint> zeros; // all bezout_number() of them
};

// The start pair data: U_i = (X_0^{d_i} - X_i^{d_i}) / sqrt(2n) together
// with its zeros (1 : w_1^{j_1} : ... : w_n^{j_n}), w_i = exp(2 pi i / d_i).
StartSystem build_U(const DegreePattern& pattern);

// Las Vegas solver: one start pair drawn from the coupled (system, zero)
// distribution, one path-following run. Output is certified or an explicit
// failure; never an uncertified answer flagged as certified.
SolveResult lv_solve(const PolySystem& f, Rng& rng, const AlhParams& params = {},
                     bool keep_trace = false);

// Deterministic solver: path following from the fixed start pair
// (U, z_1). Identical inputs give identical outputs.
SolveResult md_solve(const PolySystem& f, const AlhParams& params = {},
                     bool keep_trace = false);

struct SolveAllResult {
  std::vector<SolveResult> paths;  // ordered by start-zero index
  // index pairs whose polished zeros coincide within 1e-6 (path crossing
  // in floating point)
  std::vector<std::pair<int, int>> duplicates;
  bool all_certified = false;
};

// Tracks one path per start zero of U. Real-coefficient inputs are
// pre-rotated by a fixed unit phase (the zero set, Newton polish, and
// certification are invariant under f -> c f), keeping the segment off
// the real discriminant that a real pencil would cross with positive
// probability.
SolveAllResult solve_all(const PolySystem& f, const AlhParams& params = {},
                         int threads = 1);

struct RealZeroCount {
  int count = 0;
  bool reliable = false;
};

// Number of zeros admitting a representative with all imaginary parts at
// most 1e-6 after phase alignment on the largest-modulus coordinate.
// Unreliable when any path failed, endpoints collided, or the non-real
// zeros fail to pair up under conjugation.
RealZeroCount count_real_zeros(const PolySystem& f, const AlhParams& params = {},
                               int threads = 1);

}  // namespace smale
