#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

namespace smale {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
std::uint64_t multinomial(int degree, const std::vector<int>& alpha);

// All multi-indices alpha with |alpha| = degree over `nvars` variables,
// in graded-lex order (lexicographically decreasing exponent tuples), with
// the square roots of the multinomial coefficients C(degree, alpha).
// Tables are interned per (nvars, degree) and immutable.
class MonomialBasis {
 public:
  MonomialBasis(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return exponents_.size(); }
  const std::vector<int>& exponent(std::size_t k) const { return exponents_[k]; }
  double sqrt_multinomial(std::size_t k) const { return sqrt_multinomial_[k]; }

  // flat row-major exponent table (size() x nvars), for evaluation loops
  const int* exponent_data() const { return flat_exponents_.data(); }

  // Position of `alpha` in the graded-lex enumeration.
  std::size_t rank(const std::vector<int>& alpha) const;

  // For each monomial k and variable j, the rank of alpha_k + e_j in the
  // basis of degree + 1. Built lazily; used by dense polynomial products.
  const std::vector<std::size_t>& promotion_row(std::size_t k) const;

 private:
  int nvars_;
  int degree_;
  std::vector<std::vector<int>> exponents_;
  std::vector<int> flat_exponents_;
  std::vector<double> sqrt_multinomial_;
  mutable std::vector<std::vector<std::size_t>> promotion_;
  mutable std::once_flag promotion_once_;

  void build_promotion() const;
};

// Interned shared basis table; references stay valid for the process
// lifetime. Thread safe.
const MonomialBasis& monomial_basis(int nvars, int degree);

// The shape (n; d_1..d_n) of a system of n homogeneous polynomials in
// n + 1 variables, with the derived sizes used throughout:
//   max_degree    D = max_i d_i
//   bezout_number = prod_i d_i
//   dimension     N = sum_i C(n + d_i, n)
class DegreePattern {
 public:
  DegreePattern(int n, std::vector<int> degrees);

  int n() const { return n_; }
  int num_vars() const { return n_ + 1; }
  const std::vector<int>& degrees() const { return degrees_; }
  int degree(int i) const { return degrees_[i]; }

  int max_degree() const;
  std::uint64_t bezout_number() const;
  std::uint64_t dimension() const;

  std::size_t block_size(int i) const { return blocks_[i]->size(); }
  const MonomialBasis& basis(int i) const { return *blocks_[i]; }

  bool operator==(const DegreePattern& other) const {
    return n_ == other.n_ && degrees_ == other.degrees_;
  }
  bool operator!=(const DegreePattern& other) const { return !(*this == other); }

 private:
  int n_;
  std::vector<int> degrees_;
  std::vector<const MonomialBasis*> blocks_;
};

}  // namespace smale
