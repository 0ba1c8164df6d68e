#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "smale/degree_pattern.hpp"

namespace smale {

using Complex = std::complex<double>;

// A system of homogeneous polynomials stored as dense complex coordinate
// vectors over the Bombieri-Weyl basis {C(d,alpha)^{1/2} X^alpha}, one
// block per polynomial, multi-indices in graded-lex order. Norms and
// inner products on the stored coordinates are plain Euclidean.
struct PolySystem {
  DegreePattern pattern;
  std::vector<Eigen::VectorXcd> blocks;

  static PolySystem zero(const DegreePattern& pattern);

  double norm() const;
  double squared_norm() const;

  PolySystem& operator+=(const PolySystem& other);
  PolySystem& operator-=(const PolySystem& other);
  PolySystem& operator*=(Complex scale);
};

PolySystem operator+(PolySystem lhs, const PolySystem& rhs);
PolySystem operator-(PolySystem lhs, const PolySystem& rhs);
PolySystem operator*(Complex scale, PolySystem f);

// a*f + b*g without intermediate copies.
PolySystem linear_combination(Complex a, const PolySystem& f, Complex b,
                              const PolySystem& g);

// Largest |Im| over all stored coordinates at most `tol`.
bool is_real(const PolySystem& f, double tol = 1e-12);

// A point of P^n represented by a unit vector in C^{n+1}. The constructor
// normalizes; a zero vector is rejected.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(Eigen::VectorXcd coords);

  const Eigen::VectorXcd& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()) - 1; }

 private:
  Eigen::VectorXcd coords_;
};

// Monomial coefficient c of c*X^alpha into the stored BW coordinate and
// back: a_alpha = c / C(d_i, alpha)^{1/2}.
Complex bw_from_monomial(const DegreePattern& pattern, int block,
                         const std::vector<int>& alpha, Complex c);
Complex monomial_from_bw(const DegreePattern& pattern, int block,
                         const std::vector<int>& alpha, Complex a);

// (f_1(x), ..., f_n(x)). Overflow surfaces as non-finite entries.
Eigen::VectorXcd evaluate(const PolySystem& f, const Eigen::VectorXcd& x);

// n x (n+1) matrix with entry (i, j) = d f_i / d X_j at x.
Eigen::MatrixXcd jacobian(const PolySystem& f, const Eigen::VectorXcd& x);

// Both at once over a shared power table; the path follower's hot path.
void evaluate_with_jacobian(const PolySystem& f, const Eigen::VectorXcd& x,
                            Eigen::VectorXcd& value, Eigen::MatrixXcd& jac);

// <f, g> = sum_alpha a_alpha * conj(b_alpha); Hermitian in its arguments.
Complex inner_product(const PolySystem& f, const PolySystem& g);

// f composed with the linear change of variables x -> nu * x, expanded
// back into BW coordinates. nu must be unitary to 1e-12.
PolySystem apply_unitary(const PolySystem& f, const Eigen::MatrixXcd& nu);

// Riemannian (Fubini-Study) distance: arccos |<x, y>|, in [0, pi/2].
double proj_distance(const ProjectivePoint& x, const ProjectivePoint& y);

// Angle between f and g under the real inner product Re<f, g>, in [0, pi].
double sphere_distance(const PolySystem& f, const PolySystem& g);

// (n+1) x n matrix whose columns are an orthonormal basis of the tangent
// space T_zeta = { v : <v, zeta> = 0 }.
Eigen::MatrixXcd tangent_basis(const ProjectivePoint& zeta);

}  // namespace smale
