// Command-line front end: solving, sampling, and the Monte Carlo
// experiment harness, all seeded and reproducible.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "smale/errors.hpp"
#include "smale/experiments.hpp"
#include "smale/io.hpp"
#include "smale/parallel.hpp"
#include "smale/sampling.hpp"

namespace {

using smale::Json;

constexpr const char* kVersion = "1.0.0";

struct CommonOpts {
  std::uint64_t seed = 0;
  int threads = 0;  // 0: SMALE_THREADS or hardware
  std::string save_config;
};

std::vector<int> parse_degrees(const std::string& csv) {
  std::vector<int> degrees;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) degrees.push_back(std::stoi(item));
  return degrees;
}

void emit_error(const std::string& kind, const std::string& message) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

void maybe_save_config(const CommonOpts& common, Json config) {
  if (common.save_config.empty()) return;
  config["schema"] = 1;
  std::ofstream out(common.save_config);
  if (!out) throw smale::PreconditionError("cannot write config: " + common.save_config);
  out << config.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// solve

struct SolveOpts {
  std::string algorithm = "lv";
  std::string input;
  std::string out;
  std::string trace;
  std::int64_t max_iters = 0;
  CommonOpts common;
};

int run_solve(const SolveOpts& opts) {
  const smale::PolySystem f = smale::read_system(opts.input);
  smale::AlhParams params;
  if (opts.max_iters > 0) params.max_iters = opts.max_iters;

  maybe_save_config(opts.common, Json{{"command", "solve"},
                                      {"algorithm", opts.algorithm},
                                      {"input", opts.input},
                                      {"out", opts.out},
                                      {"trace", opts.trace},
                                      {"max_iters", opts.max_iters},
                                      {"seed", opts.common.seed},
                                      {"threads", opts.common.threads}});

  Json output;
  bool ok = false;
  if (opts.algorithm == "all") {
    const smale::SolveAllResult all =
        smale::solve_all(f, params, smale::resolve_threads(opts.common.threads));
    Json results = Json::array();
    for (const auto& r : all.paths) results.push_back(smale::solve_result_to_json(r));
    Json dup = Json::array();
    for (const auto& [a, b] : all.duplicates) dup.push_back(Json::array({a, b}));
    output = Json{{"schema", 1},
                  {"results", std::move(results)},
                  {"duplicates", std::move(dup)},
                  {"all_certified", all.all_certified}};
    ok = all.all_certified;
  } else {
    const bool keep_trace = !opts.trace.empty();
    smale::SolveResult result = [&] {
      if (opts.algorithm == "md") return smale::md_solve(f, params, keep_trace);
      smale::Rng rng(opts.common.seed);
      return smale::lv_solve(f, rng, params, keep_trace);
    }();
    if (keep_trace && result.trace) smale::write_trace_jsonl(opts.trace, *result.trace);
    output = smale::solve_result_to_json(result);
    ok = result.certified;
  }

  if (!opts.out.empty()) {
    std::ofstream out(opts.out);
    if (!out) throw smale::PreconditionError("cannot write output: " + opts.out);
    out << output.dump(2) << "\n";
  } else {
    std::cout << output.dump(2) << "\n";
  }
  if (!ok) {
    emit_error("non-convergence", "no certified zero was produced; see output for details");
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// sample

struct SampleOpts {
  std::string what = "rho-st";
  int n = 0;
  std::string degrees;
  std::int64_t count = 1;
  double sigma = 1.0;
  std::string center;
  bool truncated = false;
  bool real = false;
  std::string out;
  CommonOpts common;
};

int run_sample(const SampleOpts& opts) {
  const smale::DegreePattern pattern(opts.n, parse_degrees(opts.degrees));
  maybe_save_config(opts.common, Json{{"command", "sample"},
                                      {"what", opts.what},
                                      {"n", opts.n},
                                      {"degrees", opts.degrees},
                                      {"count", opts.count},
                                      {"sigma", opts.sigma},
                                      {"center", opts.center},
                                      {"truncated", opts.truncated},
                                      {"real", opts.real},
                                      {"out", opts.out},
                                      {"seed", opts.common.seed}});

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!opts.out.empty()) {
    file.open(opts.out);
    if (!file) throw smale::PreconditionError("cannot write output: " + opts.out);
    out = &file;
  }

  for (std::int64_t i = 0; i < opts.count; ++i) {
    smale::Rng rng = smale::Rng::substream(opts.common.seed, static_cast<std::uint64_t>(i));
    if (opts.what == "rho-st") {
      const smale::RhoStPair pair = smale::sample_rho_st(pattern, rng);
      (*out) << Json{{"g", smale::system_to_json(pair.g)},
                     {"zeta", smale::point_to_json(pair.zeta)}}
                    .dump()
             << "\n";
    } else {  // gaussian
      smale::PolySystem draw = [&] {
        if (opts.real) return smale::sample_real_gaussian(pattern, rng);
        smale::GaussianSpec spec{opts.center.empty() ? smale::PolySystem::zero(pattern)
                                                     : smale::read_system(opts.center),
                                 opts.sigma, std::nullopt};
        if (opts.truncated) spec.truncation = smale::default_truncation(pattern);
        return smale::sample_gaussian(spec, rng);
      }();
      (*out) << smale::system_to_json(draw).dump() << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// experiment

struct ExperimentOpts {
  std::string kind;
  int n = 0;
  std::string degrees;
  std::int64_t trials = 0;
  double sigma = 1.0;
  std::string center;
  std::string input;
  std::string out;
  CommonOpts common;
};

int run_experiment(const ExperimentOpts& opts) {
  const smale::DegreePattern pattern(opts.n, parse_degrees(opts.degrees));
  const int threads = opts.common.threads;
  const std::uint64_t seed = opts.common.seed;

  maybe_save_config(opts.common, Json{{"command", "experiment"},
                                      {"kind", opts.kind},
                                      {"n", opts.n},
                                      {"degrees", opts.degrees},
                                      {"trials", opts.trials},
                                      {"sigma", opts.sigma},
                                      {"center", opts.center},
                                      {"input", opts.input},
                                      {"out", opts.out},
                                      {"seed", seed},
                                      {"threads", threads}});

  auto unit_center = [&](const std::string& path) {
    smale::PolySystem c =
        path.empty() ? smale::build_U(pattern).system : smale::read_system(path);
    const double norm = c.norm();
    if (norm == 0.0) throw smale::PreconditionError("center must be nonzero");
    c *= 1.0 / norm;
    return c;
  };

  smale::ExperimentResult result = [&] {
    if (opts.kind == "avg-k") return smale::avg_k(pattern, opts.trials, seed, {}, threads);
    if (opts.kind == "smoothed-k") {
      return smale::smoothed_k(unit_center(opts.center), opts.sigma, opts.trials, seed,
                               {}, threads);
    }
    if (opts.kind == "mu2-expectation") {
      smale::PolySystem center = opts.center.empty() ? smale::PolySystem::zero(pattern)
                                                     : smale::read_system(opts.center);
      return smale::mu2_expectation(center, opts.sigma, opts.trials, seed, {}, threads);
    }
    if (opts.kind == "condition-based-k") {
      return smale::condition_based_k(unit_center(opts.input), opts.trials, seed, {},
                                      threads);
    }
    if (opts.kind == "md-avg-k") {
      return smale::md_avg_k(pattern, opts.trials, seed, {}, threads);
    }
    if (opts.kind == "real-zero-mean") {
      return smale::real_zero_mean(pattern, opts.trials, seed, {}, threads);
    }
    throw smale::PreconditionError("unknown experiment kind: " + opts.kind);
  }();

  const Json row = smale::experiment_result_to_json(result);
  if (!opts.out.empty()) {
    std::ofstream out(opts.out, std::ios::app);  // results ledger, one row per run
    if (!out) throw smale::PreconditionError("cannot write ledger: " + opts.out);
    out << row.dump() << "\n";
  }
  std::cout << row.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// report

struct ReportOpts {
  std::string in;
  bool csv = false;
};

int run_report(const ReportOpts& opts) {
  std::ifstream in(opts.in);
  if (!in) throw smale::PreconditionError("cannot open ledger: " + opts.in);
  std::vector<smale::ExperimentResult> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    rows.push_back(smale::experiment_result_from_json(Json::parse(line)));
  }

  auto degrees_csv = [](const smale::DegreePattern& p) {
    std::string s;
    for (std::size_t i = 0; i < p.degrees().size(); ++i) {
      if (i) s += ",";
      s += std::to_string(p.degrees()[i]);
    }
    return s;
  };

  if (opts.csv) {
    std::cout << "kind,n,degrees,trials,estimate,stderr,bound,passed,seed,wall_time\n";
    for (const auto& r : rows) {
      std::cout << r.kind << "," << r.pattern.n() << ",\"" << degrees_csv(r.pattern)
                << "\"," << r.trials << "," << r.estimate << "," << r.std_error << ",";
      if (r.bound) std::cout << *r.bound;
      std::cout << "," << (r.passed ? "yes" : "no") << "," << r.seed << ","
                << r.wall_time << "\n";
    }
    return 0;
  }

  std::printf("%-18s %-3s %-8s %8s %13s %12s %13s %7s\n", "kind", "n", "degrees",
              "trials", "estimate", "stderr", "bound", "passed");
  for (const auto& r : rows) {
    std::printf("%-18s %-3d %-8s %8lld %13.5g %12.4g %13.5g %7s\n", r.kind.c_str(),
                r.pattern.n(), degrees_csv(r.pattern).c_str(),
                static_cast<long long>(r.trials), r.estimate, r.std_error,
                r.bound ? *r.bound : std::nan(""), r.passed ? "yes" : "no");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// replay

int dispatch_config(const Json& config);

int run_replay(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw smale::PreconditionError("cannot open config: " + path);
  return dispatch_config(Json::parse(in));
}

int dispatch_config(const Json& config) {
  const std::string command = config.at("command").get<std::string>();
  if (command == "solve") {
    SolveOpts opts;
    opts.algorithm = config.value("algorithm", "lv");
    opts.input = config.at("input").get<std::string>();
    opts.out = config.value("out", "");
    opts.trace = config.value("trace", "");
    opts.max_iters = config.value("max_iters", std::int64_t{0});
    opts.common.seed = config.value("seed", std::uint64_t{0});
    opts.common.threads = config.value("threads", 0);
    return run_solve(opts);
  }
  if (command == "sample") {
    SampleOpts opts;
    opts.what = config.value("what", "rho-st");
    opts.n = config.at("n").get<int>();
    opts.degrees = config.at("degrees").get<std::string>();
    opts.count = config.value("count", std::int64_t{1});
    opts.sigma = config.value("sigma", 1.0);
    opts.center = config.value("center", "");
    opts.truncated = config.value("truncated", false);
    opts.real = config.value("real", false);
    opts.out = config.value("out", "");
    opts.common.seed = config.value("seed", std::uint64_t{0});
    return run_sample(opts);
  }
  if (command == "experiment") {
    ExperimentOpts opts;
    opts.kind = config.at("kind").get<std::string>();
    opts.n = config.at("n").get<int>();
    opts.degrees = config.at("degrees").get<std::string>();
    opts.trials = config.at("trials").get<std::int64_t>();
    opts.sigma = config.value("sigma", 1.0);
    opts.center = config.value("center", "");
    opts.input = config.value("input", "");
    opts.out = config.value("out", "");
    opts.common.seed = config.value("seed", std::uint64_t{0});
    opts.common.threads = config.value("threads", 0);
    return run_experiment(opts);
  }
  throw smale::PreconditionError("config has unknown command: " + command);
}

void add_common(CLI::App* cmd, CommonOpts& common) {
  cmd->add_option("--seed", common.seed, "master seed; all randomness derives from it");
  cmd->add_option("--threads", common.threads,
                  "worker count (default: SMALE_THREADS or hardware)");
  cmd->add_option("--save-config", common.save_config,
                  "persist a replayable run configuration");
}

int parse_and_dispatch(int argc, char** argv) {
  CLI::App app{"certified zeros of homogeneous polynomial systems"};
  app.require_subcommand(0, 1);

  bool version = false;
  app.add_flag("--version", version, "print version and path-follower constants");

  SolveOpts solve_opts;
  CLI::App* solve = app.add_subcommand("solve", "find certified zeros of a system");
  solve->add_option("--algorithm", solve_opts.algorithm, "lv | md | all")
      ->check(CLI::IsMember({"lv", "md", "all"}));
  solve->add_option("--input", solve_opts.input, "system JSON file")->required();
  solve->add_option("--out", solve_opts.out, "result JSON file (default: stdout)");
  solve->add_option("--trace", solve_opts.trace, "write per-step trace (lv/md)");
  solve->add_option("--max-iters", solve_opts.max_iters, "path-following step cap");
  add_common(solve, solve_opts.common);

  SampleOpts sample_opts;
  CLI::App* sample = app.add_subcommand("sample", "draw systems or start pairs");
  sample->add_option("what", sample_opts.what, "rho-st | gaussian")
      ->check(CLI::IsMember({"rho-st", "gaussian"}));
  sample->add_option("--n", sample_opts.n, "number of polynomials")->required();
  sample->add_option("--degrees", sample_opts.degrees, "comma-separated degrees")
      ->required();
  sample->add_option("--count", sample_opts.count, "number of draws");
  sample->add_option("--sigma", sample_opts.sigma, "gaussian scale");
  sample->add_option("--center", sample_opts.center, "gaussian mean system file");
  sample->add_flag("--truncated", sample_opts.truncated,
                   "reject draws outside radius sqrt(2N)");
  sample->add_flag("--real", sample_opts.real, "real coefficients");
  sample->add_option("--out", sample_opts.out, "output JSONL file (default: stdout)");
  add_common(sample, sample_opts.common);

  ExperimentOpts exp_opts;
  CLI::App* experiment =
      app.add_subcommand("experiment", "run a seeded Monte Carlo estimate");
  experiment
      ->add_option("kind", exp_opts.kind,
                   "avg-k | smoothed-k | mu2-expectation | condition-based-k | "
                   "md-avg-k | real-zero-mean")
      ->required();
  experiment->add_option("--n", exp_opts.n, "number of polynomials")->required();
  experiment->add_option("--degrees", exp_opts.degrees, "comma-separated degrees")
      ->required();
  experiment->add_option("--trials", exp_opts.trials, "Monte Carlo trials")->required();
  experiment->add_option("--sigma", exp_opts.sigma, "perturbation scale");
  experiment->add_option("--center", exp_opts.center, "center system file");
  experiment->add_option("--input", exp_opts.input,
                         "fixed input system (condition-based-k)");
  experiment->add_option("--out", exp_opts.out, "append one row to this JSONL ledger");
  add_common(experiment, exp_opts.common);

  ReportOpts report_opts;
  CLI::App* report = app.add_subcommand("report", "tabulate a results ledger");
  report->add_option("--in", report_opts.in, "ledger JSONL file")->required();
  report->add_flag("--csv", report_opts.csv, "emit CSV instead of a table");

  std::string replay_path;
  CLI::App* replay = app.add_subcommand("replay", "re-run a saved configuration");
  replay->add_option("config", replay_path, "config JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    emit_error("usage", e.what());
    std::cerr << app.help();
    return 2;
  }

  try {
    if (version) {
      smale::AlhParams params;
      std::cout << "smale " << kVersion << "\n"
                << "lambda = " << params.lambda << "\n"
                << "C      = " << params.C << "\n"
                << "eps    = " << params.eps << "\n"
                << std::setprecision(16) << "u0     = " << params.u0 << "\n";
      return 0;
    }
    if (solve->parsed()) return run_solve(solve_opts);
    if (sample->parsed()) return run_sample(sample_opts);
    if (experiment->parsed()) return run_experiment(exp_opts);
    if (report->parsed()) return run_report(report_opts);
    if (replay->parsed()) return run_replay(replay_path);
    std::cout << app.help();
    return 0;
  } catch (const Json::parse_error& e) {
    emit_error("malformed-json", e.what());  // message carries the byte offset
    return 2;
  } catch (const smale::PreconditionError& e) {
    emit_error("bad-input", e.what());
    return 2;
  } catch (const smale::UnsupportedDegreeError& e) {
    emit_error("unsupported-degree", e.what());
    return 2;
  } catch (const smale::Error& e) {
    emit_error("failure", e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) { return parse_and_dispatch(argc, argv); }
