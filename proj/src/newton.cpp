#include "smale/newton.hpp"

#include <Eigen/SVD>
#include <limits>

#include "smale/errors.hpp"

namespace smale {

namespace {

constexpr double kRankTol = 1e-14;

// Extreme singular values; closed forms for the 1x1 and 2x2 cases keep the
// path follower off the SVD for the common small systems.
void extreme_singular_values(const Eigen::MatrixXcd& a, double& smin, double& smax) {
  const Eigen::Index n = a.rows();
  if (n == 1) {
    smin = smax = std::abs(a(0, 0));
    return;
  }
  if (n == 2) {
    const double frob2 = a.squaredNorm();
    const double det = std::abs(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0));
    const double disc =
        std::sqrt(std::max(frob2 * frob2 - 4.0 * det * det, 0.0));
    smax = std::sqrt(0.5 * (frob2 + disc));
    smin = smax > 0.0 ? det / smax : 0.0;
    return;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  smax = svd.singularValues()[0];
  smin = svd.singularValues()[n - 1];
}

Eigen::MatrixXcd scale_rows_by_inverse_sqrt_degree(const DegreePattern& pattern,
                                                   Eigen::MatrixXcd a) {
  for (int i = 0; i < pattern.n(); ++i) {
    a.row(i) /= std::sqrt(static_cast<double>(pattern.degree(i)));
  }
  return a;
}

}  // namespace

void AlhParams::validate() const {
  if (!(lambda > 0.0) || !(C > 0.0) || !(eps > 0.0) || !(u0 > 0.0)) {
    throw PreconditionError("path-follower constants must be positive");
  }
  // the step-size derivation needs lambda at (or slightly below) this value
  const double cap = C * (1.0 - eps) / (2.0 * std::pow(1.0 + eps, 3));
  if (lambda > cap * (1.0 + 1e-12)) {
    throw PreconditionError("lambda exceeds C(1-eps)/(2(1+eps)^3)");
  }
  if ((1.0 + eps) * C > u0) {
    throw PreconditionError("(1+eps)C must not exceed u0");
  }
  if (max_iters < 1 || newton_refine_steps < 0) {
    throw PreconditionError("iteration limits must be positive");
  }
}

ProjectivePoint newton_step(const PolySystem& f, const ProjectivePoint& x) {
  return newton_step(f, x, tangent_basis(x));
}

ProjectivePoint newton_step(const PolySystem& f, const ProjectivePoint& x,
                            const Eigen::MatrixXcd& tangent) {
  const int n = f.pattern.n();
  Eigen::VectorXcd value;
  Eigen::MatrixXcd jac;
  evaluate_with_jacobian(f, x.coords(), value, jac);
  const Eigen::MatrixXcd a = jac * tangent;

  double smin = 0.0, smax = 0.0;
  extreme_singular_values(a, smin, smax);
  // the norm of f fixes the scale so that a fully collapsed matrix (all
  // singular values at rounding level) also counts as singular
  if (!(smin > kRankTol * std::max(smax, f.norm()))) {
    throw SingularJacobianError("restricted Jacobian is rank deficient");
  }

  Eigen::VectorXcd y(n);
  if (n == 1) {
    y[0] = value[0] / a(0, 0);
  } else if (n == 2) {
    const Complex det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    y[0] = (value[0] * a(1, 1) - value[1] * a(0, 1)) / det;
    y[1] = (value[1] * a(0, 0) - value[0] * a(1, 0)) / det;
  } else {
    y = Eigen::PartialPivLU<Eigen::MatrixXcd>(a).solve(value);
  }
  return ProjectivePoint(x.coords() - tangent * y);
}

double mu_norm(const PolySystem& f, const ProjectivePoint& x) {
  return mu_norm(f, x, tangent_basis(x));
}

double mu_norm(const PolySystem& f, const ProjectivePoint& x,
               const Eigen::MatrixXcd& tangent) {
  const Eigen::MatrixXcd a = scale_rows_by_inverse_sqrt_degree(
      f.pattern, jacobian(f, x.coords()) * tangent);
  double smin = 0.0, smax = 0.0;
  extreme_singular_values(a, smin, smax);
  if (smin <= kRankTol * std::max(smax, f.norm())) {
    return std::numeric_limits<double>::infinity();
  }
  return f.norm() / smin;
}

double mu_norm_frobenius(const PolySystem& f, const ProjectivePoint& x) {
  const Eigen::MatrixXcd a = scale_rows_by_inverse_sqrt_degree(
      f.pattern, jacobian(f, x.coords()) * tangent_basis(x));
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  const auto& sv = svd.singularValues();
  if (sv[f.pattern.n() - 1] <= kRankTol * std::max(sv[0], f.norm())) {
    return std::numeric_limits<double>::infinity();
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) sum += 1.0 / (sv[i] * sv[i]);
  return f.norm() * std::sqrt(sum);
}

CertifyOutcome certify_detail(const PolySystem& f, const ProjectivePoint& x,
                              const ProjectivePoint& zeta, const AlhParams& params) {
  CertifyOutcome out;
  const double mu = mu_norm(f, zeta);
  if (!std::isfinite(mu)) {
    out.ill_posed = true;
    out.gamma_product = std::numeric_limits<double>::infinity();
    return out;
  }
  const double d32 = std::pow(static_cast<double>(f.pattern.max_degree()), 1.5);
  out.gamma_product = d32 * mu * proj_distance(x, zeta);
  out.certified = out.gamma_product <= params.u0;
  return out;
}

bool certify(const PolySystem& f, const ProjectivePoint& x,
             const ProjectivePoint& zeta, const AlhParams& params) {
  return certify_detail(f, x, zeta, params).certified;
}

ProjectivePoint newton_refine(const PolySystem& f, ProjectivePoint x, int steps) {
  for (int i = 0; i < steps; ++i) {
    ProjectivePoint next = newton_step(f, x);
    const double moved = proj_distance(next, x);
    x = std::move(next);
    if (moved <= 1e-14) break;
  }
  return x;
}

ConditionReport mu2_and_max(const PolySystem& f,
                            const std::vector<ProjectivePoint>& zeros) {
  if (zeros.empty()) {
    throw PreconditionError("condition report needs at least one zero");
  }
  ConditionReport report;
  report.mu_per_zero.reserve(zeros.size());
  double sum_sq = 0.0;
  for (const auto& zeta : zeros) {
    const double mu = mu_norm(f, zeta);
    report.mu_per_zero.push_back(mu);
    report.mu_max = std::max(report.mu_max, mu);
    sum_sq += mu * mu;
  }
  report.mu2 = std::sqrt(sum_sq / static_cast<double>(zeros.size()));
  return report;
}

}  // namespace smale
