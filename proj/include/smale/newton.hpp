#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "smale/poly_system.hpp"

namespace smale {

// Constants of the adaptive path follower and the certification criterion,
// plus runtime knobs. The defaults are the values the step-size rule and
// the gamma criterion are derived for; validate() checks the relations the
// correctness argument needs if a caller overrides them.
struct AlhParams {
  double lambda = 7.53e-3;
  double C = 0.025;
  double eps = 0.13;
  double u0 = 3.0 - std::sqrt(7.0);
  std::int64_t max_iters = 10'000'000;
  int newton_refine_steps = 20;
  // Frobenius surrogate for the operator norm inside mu_norm; costs a
  // factor sqrt(n) in the constant but avoids the SVD.
  bool use_frobenius_mu = false;

  void validate() const;
};

// One projective Newton step x - (Df(x)|_{T_x})^{-1} f(x), renormalized.
// Throws SingularJacobianError when the restricted Jacobian has relative
// smallest singular value below 1e-14.
ProjectivePoint newton_step(const PolySystem& f, const ProjectivePoint& x);

// Variant reusing a precomputed tangent basis at x (columns orthonormal,
// orthogonal to x); the path follower shares one basis per iterate.
ProjectivePoint newton_step(const PolySystem& f, const ProjectivePoint& x,
                            const Eigen::MatrixXcd& tangent);

// Normalized condition number ||f|| / sigma_min(Delta^{-1} Df(x) B) with
// Delta = diag(sqrt(d_i)) and B an orthonormal tangent basis at x.
// Returns +infinity at rank-deficient points.
double mu_norm(const PolySystem& f, const ProjectivePoint& x);
double mu_norm(const PolySystem& f, const ProjectivePoint& x,
               const Eigen::MatrixXcd& tangent);

// Frobenius-norm variant: ||f|| * ||(Delta^{-1} Df(x) B)^{-1}||_F.
double mu_norm_frobenius(const PolySystem& f, const ProjectivePoint& x);

struct CertifyOutcome {
  bool certified = false;
  bool ill_posed = false;       // mu_norm(f, zeta) was infinite
  double gamma_product = 0.0;   // D^{3/2} mu_norm(f, zeta) d_P(x, zeta)
};

// gamma criterion: x is accepted as an approximate zero of f associated
// with zeta when D^{3/2} mu_norm(f, zeta) d_P(x, zeta) <= u0. zeta should
// be a high-accuracy zero (see newton_refine).
CertifyOutcome certify_detail(const PolySystem& f, const ProjectivePoint& x,
                              const ProjectivePoint& zeta,
                              const AlhParams& params = {});
bool certify(const PolySystem& f, const ProjectivePoint& x,
             const ProjectivePoint& zeta, const AlhParams& params = {});

// Applies newton_step up to `steps` times, stopping early once successive
// iterates are within 1e-14 in projective distance.
ProjectivePoint newton_refine(const PolySystem& f, ProjectivePoint x, int steps);

// Per-zero condition numbers with their maximum and root mean square.
struct ConditionReport {
  std::vector<double> mu_per_zero;
  double mu_max = 0.0;
  double mu2 = 0.0;
};

ConditionReport mu2_and_max(const PolySystem& f,
                            const std::vector<ProjectivePoint>& zeros);

}  // namespace smale
