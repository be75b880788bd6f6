#pragma once

#include <json.hpp>

#include "haltkit/decide.hpp"
#include "haltkit/experiment.hpp"
#include "haltkit/interp.hpp"
#include "haltkit/refgraph.hpp"
#include "haltkit/trace.hpp"

namespace haltkit {

// Machine-readable forms of the CLI outputs. Kept out of the core headers so
// the JSON dependency stays at the edges.

nlohmann::json ref_graph_to_json(const RefGraph& graph);

// {"outcome": ..., "transcript": [...], "steps": n, "detail": ...}
nlohmann::json run_outcome_to_json(const RunOutcome& outcome);

nlohmann::json proof_to_json(const DivergenceProof& proof);

nlohmann::json trace_to_json(const Trace& trace);

// schema: schemas/experiment-report.v1.json
nlohmann::json report_to_json(const ExperimentReport& report);

} // namespace haltkit
