#include "smale/io.hpp"

#include <fstream>

#include "smale/errors.hpp"

namespace smale {

namespace {

Json complex_entry(const std::vector<int>& alpha, Complex value) {
  return Json{{"alpha", alpha}, {"re", value.real()}, {"im", value.imag()}};
}

}  // namespace

Json system_to_json(const PolySystem& f) {
  Json polys = Json::array();
  for (int i = 0; i < f.pattern.n(); ++i) {
    const MonomialBasis& basis = f.pattern.basis(i);
    Json block = Json::array();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Complex a = f.blocks[i][static_cast<Eigen::Index>(k)];
      if (a == 0.0) continue;
      block.push_back(complex_entry(basis.exponent(k), a));
    }
    polys.push_back(std::move(block));
  }
  return Json{{"n", f.pattern.n()},
              {"degrees", f.pattern.degrees()},
              {"basis", "bw"},
              {"polys", std::move(polys)}};
}

PolySystem system_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  const auto degrees = j.at("degrees").get<std::vector<int>>();
  const std::string basis_kind = j.value("basis", "bw");
  if (basis_kind != "bw" && basis_kind != "monomial") {
    throw PreconditionError("unknown basis kind: " + basis_kind);
  }
  DegreePattern pattern(n, degrees);
  PolySystem f = PolySystem::zero(pattern);
  const Json& polys = j.at("polys");
  if (static_cast<int>(polys.size()) != n) {
    throw PreconditionError("system needs exactly n coefficient blocks");
  }
  for (int i = 0; i < n; ++i) {
    for (const Json& entry : polys[i]) {
      const auto alpha = entry.at("alpha").get<std::vector<int>>();
      const Complex c(entry.at("re").get<double>(), entry.at("im").get<double>());
      const std::size_t k = pattern.basis(i).rank(alpha);
      f.blocks[i][static_cast<Eigen::Index>(k)] =
          basis_kind == "bw" ? c : bw_from_monomial(pattern, i, alpha, c);
    }
  }
  return f;
}

PolySystem read_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open input file: " + path);
  Json j = Json::parse(in);  // parse_error carries the byte position
  return system_from_json(j);
}

void write_system(const std::string& path, const PolySystem& f) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot open output file: " + path);
  out << system_to_json(f).dump(2) << "\n";
}

Json point_to_json(const ProjectivePoint& p) {
  Json coords = Json::array();
  for (Eigen::Index i = 0; i < p.coords().size(); ++i) {
    coords.push_back(Json::array({p.coords()[i].real(), p.coords()[i].imag()}));
  }
  return coords;
}

ProjectivePoint point_from_json(const Json& j) {
  Eigen::VectorXcd coords(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    coords[static_cast<Eigen::Index>(i)] =
        Complex(j[i][0].get<double>(), j[i][1].get<double>());
  }
  return ProjectivePoint(std::move(coords));
}

Json solve_result_to_json(const SolveResult& r) {
  Json j{{"schema", 1},
         {"zero", point_to_json(r.zero)},
         {"iterations", r.iterations},
         {"residual", r.residual},
         {"certified", r.certified},
         {"mu_final", r.mu_final},
         {"outcome", to_string(r.outcome)}};
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

Json condition_report_to_json(const ConditionReport& r) {
  return Json{{"mu", r.mu_per_zero}, {"mu_max", r.mu_max}, {"mu2", r.mu2}};
}

Json experiment_result_to_json(const ExperimentResult& r) {
  Json j{{"schema", 1},
         {"kind", r.kind},
         {"n", r.pattern.n()},
         {"degrees", r.pattern.degrees()},
         {"trials", r.trials},
         {"estimate", r.estimate},
         {"stderr", r.std_error},
         {"passed", r.passed},
         {"seed", r.seed},
         {"wall_time", r.wall_time},
         {"discarded", r.discarded},
         {"flagged", r.flagged}};
  if (r.bound) j["bound"] = *r.bound;
  if (r.sigma) j["sigma"] = *r.sigma;
  return j;
}

ExperimentResult experiment_result_from_json(const Json& j) {
  ExperimentResult r(
      DegreePattern(j.at("n").get<int>(), j.at("degrees").get<std::vector<int>>()));
  r.kind = j.at("kind").get<std::string>();
  r.trials = j.at("trials").get<std::int64_t>();
  r.estimate = j.at("estimate").get<double>();
  r.std_error = j.at("stderr").get<double>();
  if (j.contains("bound")) r.bound = j.at("bound").get<double>();
  r.passed = j.at("passed").get<bool>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.wall_time = j.at("wall_time").get<double>();
  r.discarded = j.value("discarded", std::int64_t{0});
  r.flagged = j.value("flagged", false);
  if (j.contains("sigma")) r.sigma = j.at("sigma").get<double>();
  return r;
}

void write_trace_jsonl(const std::string& path, const PathTrace& trace) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot open trace file: " + path);
  for (const PathStep& s : trace.steps) {
    out << Json{{"tau", s.tau}, {"t", s.t}, {"mu", s.mu}, {"dtau", s.dtau}}.dump()
        << "\n";
  }
  out << Json{{"k", trace.iterations},
              {"outcome", to_string(trace.outcome)},
              {"alpha", trace.alpha},
              {"consumed", trace.consumed}}
             .dump()
      << "\n";
}

}  // namespace smale
