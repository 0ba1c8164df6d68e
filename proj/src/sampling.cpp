#include "smale/sampling.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "dense_poly.hpp"
#include "smale/errors.hpp"

namespace smale {

double default_truncation(const DegreePattern& pattern) {
  return std::sqrt(2.0 * static_cast<double>(pattern.dimension()));
}

namespace {

PolySystem centered_draw(const DegreePattern& pattern, double sigma, Rng& rng) {
  PolySystem f = PolySystem::zero(pattern);
  for (auto& block : f.blocks) {
    for (Eigen::Index k = 0; k < block.size(); ++k) {
      block[k] = sigma * rng.normal_complex();
    }
  }
  return f;
}

}  // namespace

PolySystem sample_gaussian(const GaussianSpec& spec, Rng& rng) {
  if (!(spec.sigma > 0.0)) throw PreconditionError("sigma must be positive");
  if (spec.truncation && !(*spec.truncation > 0.0)) {
    throw PreconditionError("truncation radius must be positive");
  }
  while (true) {
    PolySystem offset = centered_draw(spec.mean.pattern, spec.sigma, rng);
    if (spec.truncation && offset.norm() > *spec.truncation) continue;
    return spec.mean + offset;
  }
}

PolySystem sample_standard_gaussian(const DegreePattern& pattern, Rng& rng) {
  return centered_draw(pattern, 1.0, rng);
}

PolySystem sample_real_gaussian(const DegreePattern& pattern, Rng& rng) {
  PolySystem f = PolySystem::zero(pattern);
  for (auto& block : f.blocks) {
    for (Eigen::Index k = 0; k < block.size(); ++k) {
      block[k] = Complex(rng.normal(), 0.0);
    }
  }
  return f;
}

DecompositionTriple decompose(const PolySystem& f, const ProjectivePoint& zeta) {
  const DegreePattern& pattern = f.pattern;
  const Eigen::VectorXcd& z = zeta.coords();
  const Eigen::VectorXcd fz = evaluate(f, z);
  const Eigen::MatrixXcd jac = jacobian(f, z);

  DecompositionTriple out{PolySystem::zero(pattern),
                          Eigen::MatrixXcd(pattern.n(), pattern.num_vars()),
                          PolySystem::zero(pattern)};

  // k_i = f_i(zeta) <X,zeta>^{d_i}; the BW coordinates of <X,zeta>^d are
  // C(d,alpha)^{1/2} conj(zeta)^alpha
  for (int i = 0; i < pattern.n(); ++i) {
    const Eigen::VectorXcd power =
        detail::herm_form_power(z, pattern.degree(i));
    out.k.blocks[i] = fz[i] * detail::bw_from_monomial_block(pattern.basis(i), power);
  }

  for (int i = 0; i < pattern.n(); ++i) {
    const double di = static_cast<double>(pattern.degree(i));
    for (int j = 0; j < pattern.num_vars(); ++j) {
      out.M(i, j) = (jac(i, j) - di * fz[i] * std::conj(z[j])) / std::sqrt(di);
    }
  }

  out.h = f - out.k - build_g(out.M, zeta, pattern);
  return out;
}

PolySystem build_g(const Eigen::MatrixXcd& M, const ProjectivePoint& zeta,
                   const DegreePattern& pattern) {
  if (M.rows() != pattern.n() || M.cols() != pattern.num_vars()) {
    throw PreconditionError("matrix coordinates have wrong shape");
  }
  const Eigen::VectorXcd& z = zeta.coords();
  const double scale = std::max(1.0, M.norm());
  if ((M * z).norm() > 1e-10 * scale) {
    throw PreconditionError("rows must be linear forms vanishing at zeta");
  }
  PolySystem g = PolySystem::zero(pattern);
  for (int i = 0; i < pattern.n(); ++i) {
    const int d = pattern.degree(i);
    const Eigen::VectorXcd power = detail::herm_form_power(z, d - 1);
    const Eigen::VectorXcd mono = detail::multiply_by_linear(
        monomial_basis(pattern.num_vars(), d - 1), power, M.row(i).transpose());
    g.blocks[i] = std::sqrt(static_cast<double>(d)) *
                  detail::bw_from_monomial_block(pattern.basis(i), mono);
  }
  return g;
}

RhoStPair sample_rho_st(const DegreePattern& pattern, Rng& rng) {
  const int n = pattern.n();
  const int nvars = pattern.num_vars();
  while (true) {
    Eigen::MatrixXcd m(n, nvars);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < nvars; ++j) m(i, j) = rng.normal_complex();
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (!(sv[n - 1] > 1e-12 * sv[0])) continue;  // rank-deficient draw

    Eigen::VectorXcd kernel = svd.matrixV().col(nvars - 1);
    const double theta = rng.uniform_angle();
    kernel *= Complex(std::cos(theta), std::sin(theta));
    ProjectivePoint zeta(std::move(kernel));

    PolySystem g = build_g(m, zeta, pattern);
    const PolySystem f = sample_standard_gaussian(pattern, rng);
    g += decompose(f, zeta).h;
    return {std::move(g), std::move(zeta)};
  }
}

}  // namespace smale
