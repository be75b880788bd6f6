#include "haltkit/json_io.hpp"

namespace haltkit {

using nlohmann::json;

json ref_graph_to_json(const RefGraph& graph) {
    json nodes = json::array();
    for (const std::string& node : graph.nodes) nodes.push_back(node);

    json edges = json::array();
    for (const auto& [source, targets] : graph.edges) {
        for (const auto& [target, kinds] : targets) {
            json kind_list = json::array();
            for (RefKind kind : kinds) kind_list.push_back(to_string(kind));
            edges.push_back({{"from", source}, {"to", target}, {"kinds", kind_list}});
        }
    }
    return {{"nodes", nodes}, {"edges", edges}};
}

json run_outcome_to_json(const RunOutcome& outcome) {
    return {{"outcome", to_string(outcome.kind)},
            {"detail", outcome.detail},
            {"transcript", outcome.transcript},
            {"steps", outcome.steps}};
}

json proof_to_json(const DivergenceProof& proof) {
    if (const auto* repeat = std::get_if<PendingCallRepeat>(&proof)) {
        return {{"kind", "pending-call-repeat"},
                {"proc", repeat->proc},
                {"arg", repeat->arg},
                {"frame_depth", repeat->frame_depth}};
    }
    const auto& regress = std::get<AnalysisRegress>(proof);
    return {{"kind", "analysis-regress"},
            {"analyzer", regress.entry.analyzer},
            {"fingerprint", regress.entry.fingerprint},
            {"input", regress.entry.input}};
}

json trace_to_json(const Trace& trace) {
    json events = json::array();
    for (const TraceEvent& e : trace.events) {
        json entry{{"type", to_string(e.type)}};
        if (!e.proc.empty()) entry["proc"] = e.proc;
        if (!e.arg.empty()) entry["arg"] = e.arg;
        if (!e.analyzer.empty()) entry["analyzer"] = e.analyzer;
        if (!e.fingerprint.empty()) entry["fingerprint"] = e.fingerprint;
        if (!e.input.empty()) entry["input"] = e.input;
        if (!e.detail.empty()) entry["detail"] = e.detail;
        if (e.depth >= 0) entry["depth"] = e.depth;
        events.push_back(std::move(entry));
    }
    return {{"events", events}};
}

json report_to_json(const ExperimentReport& report) {
    json rows = json::array();
    for (const ExperimentRow& row : report.rows) {
        rows.push_back({{"analyzer", row.analyzer},
                        {"program", row.program},
                        {"input", row.input},
                        {"expected", row.expected},
                        {"actual", row.actual},
                        {"pass", row.pass}});
    }
    return {{"version", 1},
            {"rows", rows},
            {"passed", report.passed},
            {"failed", report.failed}};
}

} // namespace haltkit
