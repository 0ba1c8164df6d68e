#pragma once

#include <optional>

#include "smale/poly_system.hpp"
#include "smale/rng.hpp"

namespace smale {

// Gaussian ensemble on coefficient space: real and imaginary parts of
// every BW coordinate i.i.d. N(mean coordinate, sigma^2). An optional
// truncation radius restricts draws to ||f - mean|| <= A by rejection.
struct GaussianSpec {
  PolySystem mean;
  double sigma = 1.0;
  std::optional<double> truncation;
};

// Truncation radius used by the smoothed experiments: sqrt(2N).
double default_truncation(const DegreePattern& pattern);

PolySystem sample_gaussian(const GaussianSpec& spec, Rng& rng);

// Centered unit-variance draws; complex and real-coefficient flavors.
PolySystem sample_standard_gaussian(const DegreePattern& pattern, Rng& rng);
PolySystem sample_real_gaussian(const DegreePattern& pattern, Rng& rng);

// Orthogonal splitting of a system at a point zeta:
//   f = k + g_{M,zeta} + h
// where k_i = f_i(zeta) <X,zeta>^{d_i}, the rows of M are the linear forms
// of the middle component, and h vanishes at zeta to second order.
struct DecompositionTriple {
  PolySystem k;
  Eigen::MatrixXcd M;  // n x (n+1), satisfies M zeta = 0
  PolySystem h;
};

DecompositionTriple decompose(const PolySystem& f, const ProjectivePoint& zeta);

// The middle component from its matrix coordinates:
//   g_i = sqrt(d_i) <X,zeta>^{d_i - 1} ell_i,  ell_i = sum_j m_ij X_j.
// Rows must vanish at zeta (||M zeta|| <= 1e-10 scale); the result
// satisfies ||g|| = ||M||_F and Dg(zeta) = diag(sqrt(d_i)) M.
PolySystem build_g(const Eigen::MatrixXcd& M, const ProjectivePoint& zeta,
                   const DegreePattern& pattern);

struct RhoStPair {
  PolySystem g;
  ProjectivePoint zeta;
};

// Draws a (system, zero) pair whose system marginal is standard Gaussian
// and whose zero is uniform among the system's zeros:
//   1. M standard Gaussian on C^{n x (n+1)};
//   2. zeta = unit kernel vector of M;
//   3. multiply zeta by a uniform phase;
//   4. g1 = build_g(M, zeta);
//   5. h = second-order component at zeta of an independent standard
//      Gaussian draw;
//   6. return (g1 + h, zeta).
RhoStPair sample_rho_st(const DegreePattern& pattern, Rng& rng);

}  // namespace smale
