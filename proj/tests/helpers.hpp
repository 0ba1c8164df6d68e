#pragma once

// Shared generators and independent oracles for the test suites. The
// oracles here must not reuse the code paths they check: the univariate
// root oracle goes through a companion matrix plus scalar Newton polish,
// and the Jacobian oracle uses central finite differences.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <complex>
#include <vector>

#include "smale/poly_system.hpp"
#include "smale/rng.hpp"
#include "smale/sampling.hpp"

namespace smale::testing {

inline Eigen::MatrixXcd random_unitary(int m, Rng& rng) {
  Eigen::MatrixXcd a(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) a(i, j) = rng.normal_complex();
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < m; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= (d == 0.0) ? Complex(1, 0) : d / std::abs(d);
  }
  return q;
}

inline ProjectivePoint random_point(int nvars, Rng& rng) {
  Eigen::VectorXcd z(nvars);
  for (int i = 0; i < nvars; ++i) z[i] = rng.normal_complex();
  return ProjectivePoint(std::move(z));
}

// Unit tangent vector at zeta (orthogonal to it).
inline Eigen::VectorXcd random_tangent(const ProjectivePoint& zeta, Rng& rng) {
  const Eigen::VectorXcd& z = zeta.coords();
  Eigen::VectorXcd v(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) v[i] = rng.normal_complex();
  v -= z.dot(v) * z;  // remove the zeta component
  return v / v.norm();
}

// Point at projective distance theta from zeta along the tangent v.
inline ProjectivePoint geodesic_point(const ProjectivePoint& zeta,
                                      const Eigen::VectorXcd& unit_tangent,
                                      double theta) {
  return ProjectivePoint(std::cos(theta) * zeta.coords() +
                         std::sin(theta) * unit_tangent);
}

// Unit system at sphere distance theta from f along a random direction.
inline PolySystem sphere_neighbor(const PolySystem& f, double theta, Rng& rng) {
  PolySystem fhat = f;
  fhat *= 1.0 / f.norm();
  PolySystem h = sample_standard_gaussian(f.pattern, rng);
  // orthonormalize against fhat for the real inner product
  const double c = inner_product(h, fhat).real();
  h -= Complex(c, 0.0) * fhat;
  h *= 1.0 / h.norm();
  return linear_combination(std::cos(theta), fhat, std::sin(theta), h);
}

// Central finite differences along the real axis of each variable; valid
// for holomorphic maps.
inline Eigen::MatrixXcd finite_difference_jacobian(const PolySystem& f,
                                                   const Eigen::VectorXcd& x,
                                                   double h = 1e-6) {
  const int nvars = f.pattern.num_vars();
  Eigen::MatrixXcd jac(f.pattern.n(), nvars);
  for (int j = 0; j < nvars; ++j) {
    Eigen::VectorXcd xp = x;
    Eigen::VectorXcd xm = x;
    xp[j] += h;
    xm[j] -= h;
    jac.col(j) = (evaluate(f, xp) - evaluate(f, xm)) / (2.0 * h);
  }
  return jac;
}

// Monomial coefficients c_k of the dehomogenized univariate polynomial
// p(z) = sum_k c_k z^k for a one-polynomial system (n = 1). Block index k
// carries the exponent of X_1 because multi-indices are enumerated in
// decreasing lex order.
inline Eigen::VectorXcd dehomogenize(const PolySystem& f) {
  const MonomialBasis& basis = f.pattern.basis(0);
  Eigen::VectorXcd c(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    c[static_cast<Eigen::Index>(k)] =
        f.blocks[0][static_cast<Eigen::Index>(k)] * basis.sqrt_multinomial(k);
  }
  return c;
}

// Roots of p by companion-matrix eigenvalues, polished with scalar Newton.
inline std::vector<Complex> univariate_roots(const Eigen::VectorXcd& coeffs) {
  int degree = static_cast<int>(coeffs.size()) - 1;
  while (degree > 0 && std::abs(coeffs[degree]) == 0.0) --degree;
  std::vector<Complex> roots;
  if (degree < 1) return roots;

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
  for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -coeffs[i] / coeffs[degree];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(companion, false);

  auto eval = [&](Complex z) {
    Complex p = 0.0, dp = 0.0;
    for (int k = degree; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + coeffs[k];
    }
    return std::pair<Complex, Complex>(p, dp);
  };
  for (int i = 0; i < degree; ++i) {
    Complex z = eig.eigenvalues()[i];
    for (int it = 0; it < 16; ++it) {
      const auto [p, dp] = eval(z);
      if (std::abs(dp) == 0.0) break;
      const Complex step = p / dp;
      z -= step;
      if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    roots.push_back(z);
  }
  return roots;
}

// Affine-chart coordinate of a projective zero (z0 : z1).
inline Complex chart(const ProjectivePoint& zeta) {
  return zeta.coords()[1] / zeta.coords()[0];
}

// Largest pairing distance between two equal-size multisets of complex
// numbers under greedy nearest matching.
inline double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
  double worst = 0.0;
  for (const Complex& x : a) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const double d = std::abs(x - b[i]);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    worst = std::max(worst, best_d);
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return worst;
}

}  // namespace smale::testing
