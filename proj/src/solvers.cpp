#include "smale/solvers.hpp"

#include <cmath>

#include "smale/errors.hpp"
#include "smale/parallel.hpp"
#include "smale/sampling.hpp"

namespace smale {

namespace {

// Fixed rotation applied to real inputs before path tracking; any angle
// away from 0 and pi works.
const Complex kRealDetour = Complex(std::cos(M_PI / 4.0), std::sin(M_PI / 4.0));

void require_solvable(const PolySystem& f) {
  if (f.norm() == 0.0) throw PreconditionError("cannot solve the zero system");
  if (f.pattern.max_degree() < 2) {
    throw UnsupportedDegreeError(
        "patterns with max degree 1 are plain linear algebra and unsupported");
  }
}

// Polish, measure, and certify a finished path. `raw` is the path
// endpoint; certification compares it against its own polished limit.
SolveResult finish_path(const PolySystem& f, AlhResult&& run, const AlhParams& params,
                        bool keep_trace) {
  SolveResult result{run.x, run.trace.iterations, 0.0, false, 0.0,
                     run.trace.outcome,          {},  {}};
  const double fnorm = f.norm();
  if (run.trace.outcome == PathOutcome::success) {
    try {
      ProjectivePoint refined = newton_refine(f, run.x, params.newton_refine_steps);
      const CertifyOutcome cert = certify_detail(f, run.x, refined, params);
      result.zero = refined;
      result.residual = evaluate(f, refined.coords()).norm() / fnorm;
      result.mu_final = mu_norm(f, refined);
      result.certified = cert.certified && result.residual <= 1e-8;
    } catch (const SingularJacobianError&) {
      result.outcome = PathOutcome::singular;
      result.residual = evaluate(f, result.zero.coords()).norm() / fnorm;
    }
  } else {
    result.residual = evaluate(f, result.zero.coords()).norm() / fnorm;
  }
  if (keep_trace) result.trace = std::move(run.trace);
  return result;
}

}  // namespace

StartSystem build_U(const DegreePattern& pattern) {
  const int n = pattern.n();
  const double coeff = 1.0 / std::sqrt(2.0 * n);
  PolySystem u = PolySystem::zero(pattern);
  for (int i = 0; i < n; ++i) {
    std::vector<int> alpha(pattern.num_vars(), 0);
    alpha[0] = pattern.degree(i);
    u.blocks[i][static_cast<Eigen::Index>(pattern.basis(i).rank(alpha))] = coeff;
    alpha[0] = 0;
    alpha[i + 1] = pattern.degree(i);
    u.blocks[i][static_cast<Eigen::Index>(pattern.basis(i).rank(alpha))] = -coeff;
  }

  std::vector<ProjectivePoint> zeros;
  zeros.reserve(pattern.bezout_number());
  std::vector<int> j(n, 0);
  while (true) {
    Eigen::VectorXcd z(pattern.num_vars());
    z[0] = 1.0;
    for (int i = 0; i < n; ++i) {
      const double angle = 2.0 * M_PI * j[i] / pattern.degree(i);
      z[i + 1] = Complex(std::cos(angle), std::sin(angle));
    }
    zeros.emplace_back(std::move(z));
    int pos = n - 1;
    while (pos >= 0 && ++j[pos] == pattern.degree(pos)) j[pos--] = 0;
    if (pos < 0) break;
  }
  return {std::move(u), std::move(zeros)};
}

SolveResult lv_solve(const PolySystem& f, Rng& rng, const AlhParams& params,
                     bool keep_trace) {
  require_solvable(f);
  const std::uint64_t seed = rng.seed();
  RhoStPair start = sample_rho_st(f.pattern, rng);
  SolveResult result =
      finish_path(f, alh(f, start.g, start.zeta, params, keep_trace), params, keep_trace);
  result.seed = seed;
  return result;
}

SolveResult md_solve(const PolySystem& f, const AlhParams& params, bool keep_trace) {
  require_solvable(f);
  StartSystem start = build_U(f.pattern);
  return finish_path(f, alh(f, start.system, start.zeros[0], params, keep_trace),
                     params, keep_trace);
}

SolveAllResult solve_all(const PolySystem& f, const AlhParams& params, int threads) {
  require_solvable(f);
  const PolySystem tracked = is_real(f) ? kRealDetour * f : f;
  StartSystem start = build_U(f.pattern);
  const int count = static_cast<int>(start.zeros.size());

  SolveAllResult out;
  std::vector<std::optional<SolveResult>> slots(count);
  parallel_for(count, threads, [&](std::int64_t j) {
    try {
      slots[j] = finish_path(f, alh(tracked, start.system, start.zeros[j], params, false),
                             params, false);
    } catch (const Error&) {
      slots[j] = std::nullopt;
    }
  });

  out.all_certified = true;
  out.paths.reserve(count);
  for (int j = 0; j < count; ++j) {
    if (!slots[j]) {
      SolveResult failed{start.zeros[j], 0,     1.0, false,
                         0.0,            PathOutcome::singular, {}, {}};
      out.paths.push_back(std::move(failed));
      out.all_certified = false;
      continue;
    }
    if (!slots[j]->certified) out.all_certified = false;
    out.paths.push_back(std::move(*slots[j]));
  }
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      if (!out.paths[a].certified || !out.paths[b].certified) continue;
      if (proj_distance(out.paths[a].zero, out.paths[b].zero) < 1e-6) {
        out.duplicates.emplace_back(a, b);
      }
    }
  }
  return out;
}

namespace {

bool is_real_zero(const ProjectivePoint& zeta) {
  const Eigen::VectorXcd& z = zeta.coords();
  Eigen::Index imax = 0;
  z.cwiseAbs().maxCoeff(&imax);
  const Complex pivot = z[imax];
  const Complex phase = pivot / std::abs(pivot);
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    if (std::abs((z[i] / phase).imag()) > 1e-6) return false;
  }
  return true;
}

}  // namespace

RealZeroCount count_real_zeros(const PolySystem& f, const AlhParams& params,
                               int threads) {
  if (!is_real(f)) {
    throw PreconditionError("real-zero counting needs a real-coefficient system");
  }
  const SolveAllResult all = solve_all(f, params, threads);
  RealZeroCount out;
  out.reliable = all.all_certified && all.duplicates.empty();
  for (const auto& path : all.paths) {
    if (path.certified && is_real_zero(path.zero)) ++out.count;
  }
  // conjugate zeros pair up for real systems; an odd remainder means a
  // misclassified or lost path
  const int nonreal = static_cast<int>(all.paths.size()) - out.count;
  if (nonreal % 2 != 0) out.reliable = false;
  return out;
}

}  // namespace smale
