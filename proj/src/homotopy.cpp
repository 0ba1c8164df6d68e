#include "smale/homotopy.hpp"

#include <cmath>

#include "smale/errors.hpp"

namespace smale {

namespace {
constexpr double kDegenerateAngle = 1e-8;
}

std::string to_string(PathOutcome outcome) {
  switch (outcome) {
    case PathOutcome::success:
      return "success";
    case PathOutcome::max_iters_exceeded:
      return "max-iters-exceeded";
    case PathOutcome::singular:
      return "singular";
  }
  return "unknown";
}

double t_of_tau(double tau, double alpha, double r, double s) {
  if (!(alpha > 0.0) || !(alpha < M_PI)) {
    throw DegeneratePencilError("pencil angle must lie in (0, pi)");
  }
  if (!(r > 0.0) || !(s > 0.0)) {
    throw PreconditionError("endpoint norms must be positive");
  }
  if (tau <= 0.0) return 0.0;
  if (tau >= 1.0) return 1.0;
  const double denom = r * std::sin(alpha) / std::tan(tau * alpha) - r * std::cos(alpha) + s;
  return std::clamp(s / denom, 0.0, 1.0);
}

AlhResult alh(const PolySystem& f, const PolySystem& g, const ProjectivePoint& zeta,
              const AlhParams& params, bool record_steps) {
  params.validate();
  const double r = f.norm();
  const double s = g.norm();
  if (r == 0.0 || g.pattern != f.pattern) {
    throw PreconditionError("homotopy needs nonzero systems over one pattern");
  }
  if (evaluate(g, zeta.coords()).norm() > 1e-10 * s) {
    throw PreconditionError("start point is not a zero of the start system");
  }

  PathTrace trace;
  const double alpha = sphere_distance(f, g);
  trace.alpha = alpha;

  if (alpha <= kDegenerateAngle) {
    // endpoints projectively equal; polish directly on the target
    ProjectivePoint x = newton_refine(f, zeta, params.newton_refine_steps);
    return {std::move(x), std::move(trace)};
  }
  if (alpha >= M_PI - kDegenerateAngle) {
    throw DegeneratePencilError("antiparallel homotopy endpoints");
  }

  const double d32 = std::pow(static_cast<double>(f.pattern.max_degree()), 1.5);
  double tau = 0.0;
  PolySystem q = g;
  ProjectivePoint x = zeta;

  while (true) {
    if (trace.iterations >= params.max_iters) {
      trace.outcome = PathOutcome::max_iters_exceeded;
      break;
    }
    const Eigen::MatrixXcd tangent = tangent_basis(x);
    const double mu =
        params.use_frobenius_mu ? mu_norm_frobenius(q, x) : mu_norm(q, x, tangent);
    if (!std::isfinite(mu)) {
      trace.outcome = PathOutcome::singular;
      break;
    }
    const double dtau = params.lambda / (alpha * d32 * mu * mu);
    const double tau_next = std::min(1.0, tau + dtau);
    if (tau_next == tau) {
      // parameter no longer advances in double precision; the path has
      // stalled against an ill-posed segment point
      trace.outcome = PathOutcome::max_iters_exceeded;
      break;
    }
    tau = tau_next;
    const double t = t_of_tau(tau, alpha, r, s);
    for (std::size_t i = 0; i < q.blocks.size(); ++i) {
      q.blocks[i] = t * f.blocks[i] + (1.0 - t) * g.blocks[i];
    }
    try {
      x = newton_step(q, x, tangent);
    } catch (const SingularJacobianError&) {
      trace.outcome = PathOutcome::singular;
      break;
    }
    ++trace.iterations;
    trace.consumed += dtau * alpha * d32 * mu * mu;
    if (record_steps) trace.steps.push_back({tau, t, mu, dtau});
    if (tau >= 1.0) {
      trace.outcome = PathOutcome::success;
      break;
    }
  }
  return {std::move(x), std::move(trace)};
}

}  // namespace smale
