#pragma once

// Dense homogeneous polynomials over the plain monomial basis, used
// internally for products of linear forms (unitary substitution, powers
// of <X, zeta>). Coefficient vectors are indexed by the shared
// MonomialBasis tables.

#include <Eigen/Dense>

#include "smale/degree_pattern.hpp"

namespace smale::detail {

// coeffs indexes monomials of `basis`; linear holds the nvars coefficients
// of a linear form. Returns the product's coefficients over the basis of
// degree + 1.
inline Eigen::VectorXcd multiply_by_linear(const MonomialBasis& basis,
                                           const Eigen::VectorXcd& coeffs,
                                           const Eigen::VectorXcd& linear) {
  const MonomialBasis& up = monomial_basis(basis.nvars(), basis.degree() + 1);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(up.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const std::complex<double> c = coeffs[static_cast<Eigen::Index>(k)];
    if (c == 0.0) continue;
    const auto& row = basis.promotion_row(k);
    for (int j = 0; j < basis.nvars(); ++j) {
      out[static_cast<Eigen::Index>(row[j])] += c * linear[j];
    }
  }
  return out;
}

// Monomial coefficients of <X, zeta>^degree = (sum_j conj(zeta_j) X_j)^degree
// by iterated multiplication.
inline Eigen::VectorXcd herm_form_power(const Eigen::VectorXcd& zeta, int degree) {
  const int nvars = static_cast<int>(zeta.size());
  Eigen::VectorXcd form = zeta.conjugate();
  Eigen::VectorXcd acc = Eigen::VectorXcd::Ones(1);
  for (int k = 0; k < degree; ++k) {
    acc = multiply_by_linear(monomial_basis(nvars, k), acc, form);
  }
  return acc;
}

// Monomial coefficients -> BW coordinates over the same basis (divide by
// the square roots of the multinomial coefficients), and back.
inline Eigen::VectorXcd bw_from_monomial_block(const MonomialBasis& basis,
                                               const Eigen::VectorXcd& mono) {
  Eigen::VectorXcd out(mono.size());
  for (Eigen::Index k = 0; k < mono.size(); ++k) {
    out[k] = mono[k] / basis.sqrt_multinomial(static_cast<std::size_t>(k));
  }
  return out;
}

inline Eigen::VectorXcd monomial_from_bw_block(const MonomialBasis& basis,
                                               const Eigen::VectorXcd& bw) {
  Eigen::VectorXcd out(bw.size());
  for (Eigen::Index k = 0; k < bw.size(); ++k) {
    out[k] = bw[k] * basis.sqrt_multinomial(static_cast<std::size_t>(k));
  }
  return out;
}

}  // namespace smale::detail
