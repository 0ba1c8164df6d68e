#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smale/newton.hpp"
#include "smale/poly_system.hpp"

namespace smale {

enum class PathOutcome { success, max_iters_exceeded, singular };

std::string to_string(PathOutcome outcome);

struct PathStep {
  double tau;   // after the update, clipped to 1
  double t;     // Euclidean fraction matching tau
  double mu;    // mu_norm(q, x) that priced the step
  double dtau;  // step-size rule value lambda / (alpha D^{3/2} mu^2)
};

struct PathTrace {
  std::vector<PathStep> steps;  // empty when step recording is off
  std::int64_t iterations = 0;
  PathOutcome outcome = PathOutcome::success;
  double alpha = 0.0;     // sphere angle between the endpoints
  double consumed = 0.0;  // sum of dtau * alpha * D^{3/2} * mu^2
};

// Euclidean interpolation fraction t such that the segment point
// t*f + (1-t)*g sits at angle tau * alpha from g:
//   t(tau) = s / (r sin(alpha) cot(tau alpha) - r cos(alpha) + s)
// with r = ||f||, s = ||g||. Strictly increasing, t(0) = 0, t(1) = 1.
double t_of_tau(double tau, double alpha, double r, double s);

struct AlhResult {
  ProjectivePoint x;
  PathTrace trace;
};

// Adaptive linear homotopy: follows the zero path of the segment from g
// to f starting at the zero zeta of g, stepping
//   dtau = lambda / (alpha D^{3/2} mu_norm^2(q, x)),
// one projective Newton step per parameter update. Preconditions:
// g(zeta) = 0 to 1e-10 ||g||, f and g nonzero. Endpoints at angle below
// 1e-8 skip the homotopy and Newton-polish zeta on f directly (zero
// iterations); antiparallel endpoints are rejected.
AlhResult alh(const PolySystem& f, const PolySystem& g, const ProjectivePoint& zeta,
              const AlhParams& params = {}, bool record_steps = true);

}  // namespace smale
