#pragma once

#include <optional>
#include <string>
#include <variant>

#include "haltkit/analysis.hpp"
#include "haltkit/budgets.hpp"
#include "haltkit/dictionary.hpp"
#include "haltkit/trace.hpp"
#include "haltkit/verdict.hpp"

namespace haltkit {

// Evidence for a 'no'. Both certificates are independently checkable against
// the recorded simulation trace; neither asks the checker to re-run the
// decider.
struct PendingCallRepeat {
    std::string proc;
    std::string arg;
    std::size_t frame_depth = 0; // where the identical pending frame sat
};

struct AnalysisRegress {
    AnalysisEntry entry; // the analysis that was requested while in progress
};

using DivergenceProof = std::variant<PendingCallRepeat, AnalysisRegress>;

struct DecideResult {
    Verdict verdict = Verdict::Yes; // Yes or No only
    std::optional<DivergenceProof> proof;
};

// Decides whether proc(input) terminates, by simulation:
//   - normal halt or fault  => 'yes' (a fault is termination, just abnormal);
//   - a Call repeating a pending (proc, arg) frame => 'no' + PendingCallRepeat;
//   - an analysis request repeating a live entry   => 'no' + AnalysisRegress
//     (the signal unwinds to the outermost decide; intermediate analyses
//     cannot deliver a value a real computation would never produce).
// Budget exhaustion is an error (BudgetError), never a verdict; given finite
// budgets, decide always returns or raises.
DecideResult decide(const Dictionary& dict, const std::string& proc, const std::string& input,
                    AnalysisContext& ctx);

// Convenience entry point with a private Tracked context.
DecideResult decide(const Dictionary& dict, const std::string& proc, const std::string& input,
                    const Budgets& budgets, Trace* trace = nullptr);

// Replays the trace and confirms the cited repetition/regress actually
// happened with the cited frame or analysis entry live at that moment.
bool check_proof(const DivergenceProof& proof, const Trace& trace);

} // namespace haltkit
