#pragma once

#include <json.hpp>
#include <string>

#include "smale/experiments.hpp"
#include "smale/newton.hpp"
#include "smale/solvers.hpp"

namespace smale {

using Json = nlohmann::json;

// System format:
//   {"n": int, "degrees": [int], "basis": "monomial"|"bw",
//    "polys": [[{"alpha": [int], "re": float, "im": float}]]}
// Missing multi-indices are zero. Writers always emit "bw".
Json system_to_json(const PolySystem& f);
PolySystem system_from_json(const Json& j);

PolySystem read_system(const std::string& path);
void write_system(const std::string& path, const PolySystem& f);

// Points serialize as [[re, im], ...].
Json point_to_json(const ProjectivePoint& p);
ProjectivePoint point_from_json(const Json& j);

Json solve_result_to_json(const SolveResult& r);
Json condition_report_to_json(const ConditionReport& r);
Json experiment_result_to_json(const ExperimentResult& r);
ExperimentResult experiment_result_from_json(const Json& j);

// One JSON object per line: every step, then a summary record.
void write_trace_jsonl(const std::string& path, const PathTrace& trace);

}  // namespace smale
