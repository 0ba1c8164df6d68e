#include "smale/poly_system.hpp"

#include <cmath>

#include "dense_poly.hpp"
#include "smale/errors.hpp"

namespace smale {

namespace {

void require_same_pattern(const PolySystem& f, const PolySystem& g) {
  if (f.pattern != g.pattern) {
    throw PatternMismatchError("systems have different degree patterns");
  }
}

// x_j^e for e <= max_degree, row-major per variable, in a reused buffer.
// The evaluation loops below run once per path step; they work on raw
// arrays to stay off the allocator.
const Complex* power_table(const Eigen::VectorXcd& x, int max_degree) {
  thread_local std::vector<Complex> table;
  const int nvars = static_cast<int>(x.size());
  const int stride = max_degree + 1;
  table.resize(static_cast<std::size_t>(nvars) * stride);
  for (int j = 0; j < nvars; ++j) {
    Complex* row = table.data() + static_cast<std::size_t>(j) * stride;
    row[0] = 1.0;
    for (int e = 1; e <= max_degree; ++e) row[e] = row[e - 1] * x[j];
  }
  return table.data();
}

// Shared core: per monomial, prefix/suffix products give the value and all
// partials in O(nvars) multiplications.
void accumulate_block(const MonomialBasis& basis, const Eigen::VectorXcd& coeffs,
                      const Complex* pow, int stride, Complex* value_out,
                      Complex* jac_row) {
  const int nvars = basis.nvars();
  const int* exps = basis.exponent_data();
  thread_local std::vector<Complex> prefix, suffix;
  prefix.resize(nvars + 1);
  suffix.resize(nvars + 1);
  for (std::size_t k = 0; k < basis.size(); ++k, exps += nvars) {
    const Complex c = coeffs[static_cast<Eigen::Index>(k)];
    if (c == 0.0) continue;
    const Complex scaled = c * basis.sqrt_multinomial(k);
    prefix[0] = 1.0;
    for (int j = 0; j < nvars; ++j) {
      prefix[j + 1] = prefix[j] * pow[j * stride + exps[j]];
    }
    if (value_out != nullptr) *value_out += scaled * prefix[nvars];
    if (jac_row == nullptr) continue;
    suffix[nvars] = 1.0;
    for (int j = nvars - 1; j >= 0; --j) {
      suffix[j] = pow[j * stride + exps[j]] * suffix[j + 1];
    }
    for (int j = 0; j < nvars; ++j) {
      if (exps[j] == 0) continue;
      jac_row[j] += scaled * static_cast<double>(exps[j]) *
                    (prefix[j] * pow[j * stride + exps[j] - 1] * suffix[j + 1]);
    }
  }
}

}  // namespace

PolySystem PolySystem::zero(const DegreePattern& pattern) {
  PolySystem f{pattern, {}};
  f.blocks.reserve(pattern.n());
  for (int i = 0; i < pattern.n(); ++i) {
    f.blocks.emplace_back(Eigen::VectorXcd::Zero(pattern.block_size(i)));
  }
  return f;
}

double PolySystem::squared_norm() const {
  double total = 0.0;
  for (const auto& block : blocks) total += block.squaredNorm();
  return total;
}

double PolySystem::norm() const { return std::sqrt(squared_norm()); }

PolySystem& PolySystem::operator+=(const PolySystem& other) {
  require_same_pattern(*this, other);
  for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] += other.blocks[i];
  return *this;
}

PolySystem& PolySystem::operator-=(const PolySystem& other) {
  require_same_pattern(*this, other);
  for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] -= other.blocks[i];
  return *this;
}

PolySystem& PolySystem::operator*=(Complex scale) {
  for (auto& block : blocks) block *= scale;
  return *this;
}

PolySystem operator+(PolySystem lhs, const PolySystem& rhs) { return lhs += rhs; }
PolySystem operator-(PolySystem lhs, const PolySystem& rhs) { return lhs -= rhs; }
PolySystem operator*(Complex scale, PolySystem f) { return f *= scale; }

PolySystem linear_combination(Complex a, const PolySystem& f, Complex b,
                              const PolySystem& g) {
  require_same_pattern(f, g);
  PolySystem out{f.pattern, {}};
  out.blocks.reserve(f.blocks.size());
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    out.blocks.emplace_back(a * f.blocks[i] + b * g.blocks[i]);
  }
  return out;
}

bool is_real(const PolySystem& f, double tol) {
  for (const auto& block : f.blocks) {
    for (Eigen::Index k = 0; k < block.size(); ++k) {
      if (std::abs(block[k].imag()) > tol) return false;
    }
  }
  return true;
}

ProjectivePoint::ProjectivePoint(Eigen::VectorXcd coords) : coords_(std::move(coords)) {
  const double norm = coords_.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw PreconditionError("projective point needs a nonzero finite representative");
  }
  coords_ /= norm;
}

Complex bw_from_monomial(const DegreePattern& pattern, int block,
                         const std::vector<int>& alpha, Complex c) {
  const MonomialBasis& basis = pattern.basis(block);
  const std::size_t k = basis.rank(alpha);  // validates |alpha| = d_i
  return c / basis.sqrt_multinomial(k);
}

Complex monomial_from_bw(const DegreePattern& pattern, int block,
                         const std::vector<int>& alpha, Complex a) {
  const MonomialBasis& basis = pattern.basis(block);
  const std::size_t k = basis.rank(alpha);
  return a * basis.sqrt_multinomial(k);
}

Eigen::VectorXcd evaluate(const PolySystem& f, const Eigen::VectorXcd& x) {
  const DegreePattern& pattern = f.pattern;
  const int stride = pattern.max_degree() + 1;
  const Complex* pow = power_table(x, pattern.max_degree());
  Eigen::VectorXcd value = Eigen::VectorXcd::Zero(pattern.n());
  for (int i = 0; i < pattern.n(); ++i) {
    accumulate_block(pattern.basis(i), f.blocks[i], pow, stride, &value[i], nullptr);
  }
  return value;
}

Eigen::MatrixXcd jacobian(const PolySystem& f, const Eigen::VectorXcd& x) {
  const DegreePattern& pattern = f.pattern;
  const int stride = pattern.max_degree() + 1;
  const Complex* pow = power_table(x, pattern.max_degree());
  Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(pattern.n(), pattern.num_vars());
  // row-major scratch keeps the per-monomial writes contiguous
  thread_local std::vector<Complex> row;
  row.resize(pattern.num_vars());
  for (int i = 0; i < pattern.n(); ++i) {
    std::fill(row.begin(), row.end(), Complex(0.0));
    accumulate_block(pattern.basis(i), f.blocks[i], pow, stride, nullptr, row.data());
    for (int j = 0; j < pattern.num_vars(); ++j) jac(i, j) = row[j];
  }
  return jac;
}

void evaluate_with_jacobian(const PolySystem& f, const Eigen::VectorXcd& x,
                            Eigen::VectorXcd& value, Eigen::MatrixXcd& jac) {
  const DegreePattern& pattern = f.pattern;
  const int stride = pattern.max_degree() + 1;
  const Complex* pow = power_table(x, pattern.max_degree());
  value.setZero(pattern.n());
  jac.setZero(pattern.n(), pattern.num_vars());
  thread_local std::vector<Complex> row;
  row.resize(pattern.num_vars());
  for (int i = 0; i < pattern.n(); ++i) {
    std::fill(row.begin(), row.end(), Complex(0.0));
    accumulate_block(pattern.basis(i), f.blocks[i], pow, stride, &value[i], row.data());
    for (int j = 0; j < pattern.num_vars(); ++j) jac(i, j) = row[j];
  }
}

Complex inner_product(const PolySystem& f, const PolySystem& g) {
  require_same_pattern(f, g);
  Complex acc = 0.0;
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    // sum_alpha a_alpha * conj(b_alpha)
    acc += g.blocks[i].dot(f.blocks[i]);
  }
  return acc;
}

PolySystem apply_unitary(const PolySystem& f, const Eigen::MatrixXcd& nu) {
  const DegreePattern& pattern = f.pattern;
  const int nvars = pattern.num_vars();
  if (nu.rows() != nvars || nu.cols() != nvars) {
    throw PreconditionError("change of variables has wrong size");
  }
  const double defect =
      (nu.adjoint() * nu - Eigen::MatrixXcd::Identity(nvars, nvars)).norm();
  if (defect > 1e-12 * nvars) {
    throw PreconditionError("change of variables is not unitary");
  }

  PolySystem out = PolySystem::zero(pattern);
  for (int i = 0; i < pattern.n(); ++i) {
    const MonomialBasis& basis = pattern.basis(i);
    Eigen::VectorXcd mono = Eigen::VectorXcd::Zero(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Complex a = f.blocks[i][static_cast<Eigen::Index>(k)];
      if (a == 0.0) continue;
      // X^alpha -> prod_j (row_j(nu) . X)^{alpha_j}, expanded one linear
      // factor at a time
      const auto& alpha = basis.exponent(k);
      Eigen::VectorXcd acc = Eigen::VectorXcd::Ones(1);
      int degree_so_far = 0;
      for (int j = 0; j < nvars; ++j) {
        const Eigen::VectorXcd row = nu.row(j).transpose();
        for (int rep = 0; rep < alpha[j]; ++rep) {
          acc = detail::multiply_by_linear(monomial_basis(nvars, degree_so_far), acc, row);
          ++degree_so_far;
        }
      }
      mono += (a * basis.sqrt_multinomial(k)) * acc;
    }
    out.blocks[i] = detail::bw_from_monomial_block(basis, mono);
  }
  return out;
}

double proj_distance(const ProjectivePoint& x, const ProjectivePoint& y) {
  // chord form: phase-align y against x, then 2 asin(chord / 2). Equivalent
  // to arccos |<x,y>| but resolves tiny angles that arccos flattens to ~1e-8.
  const Complex c = x.coords().dot(y.coords());
  const double mag = std::abs(c);
  if (mag == 0.0) return M_PI / 2.0;
  const Complex phase = std::conj(c) / mag;
  const double chord = (x.coords() - phase * y.coords()).norm();
  return 2.0 * std::asin(std::clamp(0.5 * chord, 0.0, 1.0));
}

double sphere_distance(const PolySystem& f, const PolySystem& g) {
  const double nf = f.norm();
  const double ng = g.norm();
  if (nf == 0.0 || ng == 0.0) {
    throw PreconditionError("sphere distance needs nonzero systems");
  }
  // chord form for the real angle, stable near 0 and pi
  const PolySystem diff = linear_combination(1.0 / nf, f, -1.0 / ng, g);
  const double chord = diff.norm();
  if (chord <= 1.0) return 2.0 * std::asin(0.5 * chord);
  const PolySystem sum = linear_combination(1.0 / nf, f, 1.0 / ng, g);
  return M_PI - 2.0 * std::asin(std::clamp(0.5 * sum.norm(), 0.0, 1.0));
}

Eigen::MatrixXcd tangent_basis(const ProjectivePoint& zeta) {
  const Eigen::VectorXcd& z = zeta.coords();
  const Eigen::Index m = z.size();
  // Householder reflection mapping zeta to a multiple of e_0; its trailing
  // columns span the orthogonal complement of zeta.
  const Complex z0 = z[0];
  const Complex phase = (z0 == 0.0) ? Complex(1.0, 0.0) : z0 / std::abs(z0);
  Eigen::VectorXcd u = z;
  u[0] += phase;  // u = z - alpha e_0 with alpha = -phase
  const double un2 = u.squaredNorm();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(m, m);
  h.noalias() -= (2.0 / un2) * (u * u.adjoint());
  return h.rightCols(m - 1);
}

}  // namespace smale
