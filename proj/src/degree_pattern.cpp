#include "smale/degree_pattern.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "smale/errors.hpp"

namespace smale {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // exact at every step: result * (n - k + i) is divisible by i
    result = result / i * (n - k + i) + result % i * (n - k + i) / i;
  }
  return result;
}

std::uint64_t multinomial(int degree, const std::vector<int>& alpha) {
  std::uint64_t result = 1;
  std::uint64_t partial = 0;
  for (int a : alpha) {
    partial += static_cast<std::uint64_t>(a);
    result *= binomial(partial, static_cast<std::uint64_t>(a));
  }
  if (partial != static_cast<std::uint64_t>(degree)) {
    throw DegreeMismatchError("multi-index total degree does not match block degree");
  }
  return result;
}

namespace {

void enumerate_rec(int remaining, int pos, int nvars, std::vector<int>& scratch,
                   std::vector<std::vector<int>>& out) {
  if (pos == nvars - 1) {
    scratch[pos] = remaining;
    out.push_back(scratch);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    scratch[pos] = e;
    enumerate_rec(remaining - e, pos + 1, nvars, scratch, out);
  }
}

}  // namespace

MonomialBasis::MonomialBasis(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars < 1 || degree < 0) throw PreconditionError("bad basis shape");
  std::vector<int> scratch(nvars, 0);
  enumerate_rec(degree, 0, nvars, scratch, exponents_);
  sqrt_multinomial_.reserve(exponents_.size());
  flat_exponents_.reserve(exponents_.size() * nvars);
  for (const auto& alpha : exponents_) {
    sqrt_multinomial_.push_back(std::sqrt(static_cast<double>(multinomial(degree, alpha))));
    flat_exponents_.insert(flat_exponents_.end(), alpha.begin(), alpha.end());
  }
}

std::size_t MonomialBasis::rank(const std::vector<int>& alpha) const {
  if (static_cast<int>(alpha.size()) != nvars_) {
    throw DegreeMismatchError("multi-index has wrong number of variables");
  }
  // count predecessors in decreasing lex order coordinate by coordinate
  std::size_t r = 0;
  int remaining = degree_;
  for (int j = 0; j < nvars_ - 1; ++j) {
    if (alpha[j] < 0 || alpha[j] > remaining) {
      throw DegreeMismatchError("multi-index total degree does not match block degree");
    }
    for (int v = remaining; v > alpha[j]; --v) {
      r += static_cast<std::size_t>(
          binomial(static_cast<std::uint64_t>(remaining - v + nvars_ - j - 2),
                   static_cast<std::uint64_t>(nvars_ - j - 2)));
    }
    remaining -= alpha[j];
  }
  if (alpha[nvars_ - 1] != remaining) {
    throw DegreeMismatchError("multi-index total degree does not match block degree");
  }
  return r;
}

void MonomialBasis::build_promotion() const {
  const MonomialBasis& up = monomial_basis(nvars_, degree_ + 1);
  promotion_.resize(exponents_.size());
  std::vector<int> bumped;
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    promotion_[k].resize(nvars_);
    bumped = exponents_[k];
    for (int j = 0; j < nvars_; ++j) {
      ++bumped[j];
      promotion_[k][j] = up.rank(bumped);
      --bumped[j];
    }
  }
}

const std::vector<std::size_t>& MonomialBasis::promotion_row(std::size_t k) const {
  std::call_once(promotion_once_, [this] { build_promotion(); });
  return promotion_[k];
}

const MonomialBasis& monomial_basis(int nvars, int degree) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<MonomialBasis>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{nvars, degree}];
  if (!slot) slot = std::make_unique<MonomialBasis>(nvars, degree);
  return *slot;
}

DegreePattern::DegreePattern(int n, std::vector<int> degrees)
    : n_(n), degrees_(std::move(degrees)) {
  if (n_ < 1) throw PreconditionError("pattern needs n >= 1");
  if (static_cast<int>(degrees_.size()) != n_) {
    throw PreconditionError("pattern needs exactly n degrees");
  }
  blocks_.reserve(degrees_.size());
  for (int d : degrees_) {
    if (d < 1) throw PreconditionError("every degree must be >= 1");
    blocks_.push_back(&monomial_basis(n_ + 1, d));
  }
}

int DegreePattern::max_degree() const {
  int d = 1;
  for (int di : degrees_) d = std::max(d, di);
  return d;
}

std::uint64_t DegreePattern::bezout_number() const {
  std::uint64_t prod = 1;
  for (int d : degrees_) prod *= static_cast<std::uint64_t>(d);
  return prod;
}

std::uint64_t DegreePattern::dimension() const {
  std::uint64_t total = 0;
  for (const auto* b : blocks_) total += b->size();
  return total;
}

}  // namespace smale
