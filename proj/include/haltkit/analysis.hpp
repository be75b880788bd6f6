#pragma once

#include <string>
#include <vector>

#include "haltkit/budgets.hpp"
#include "haltkit/trace.hpp"

namespace haltkit {

// Identity of one analysis request. Fingerprinting the canonical render makes
// the identity stable across layout differences, so canonically identical
// programs share analysis identities.
struct AnalysisEntry {
    std::string analyzer;
    std::string fingerprint;
    std::string input;

    friend bool operator==(const AnalysisEntry&, const AnalysisEntry&) = default;
};

// How intrinsic analysis requests behave while a simulation is in progress.
//
// Tracked — requests are checked against the stack of in-progress entries; a
//           duplicate push attempt is the divergence signal (the repeated
//           request would recreate the pending computation exactly). Used by
//           host-level analysis.
//
// Fresh   — every request is honored by bodily re-performing the analysis,
//           with no memory of enclosing ones; only the shared depth budget
//           bounds the nesting. Used by actual execution, where an analyzer
//           invoked from object code behaves like an interpreted copy of
//           itself: a self-referential tower really does not terminate, and
//           surfaces as budget exhaustion rather than as an answer.
enum class AnalysisMode { Tracked, Fresh };

// Per-entry-point state threaded through a run or analysis and every nested
// analysis it spawns. Step and depth counters are shared across nesting;
// `entries` is the stack of in-progress analyses (Tracked mode only).
struct AnalysisContext {
    Budgets budgets{};
    AnalysisMode mode = AnalysisMode::Tracked;
    std::vector<AnalysisEntry> entries;
    long long steps_used = 0;
    int depth = 0;          // analyses currently in flight
    int decide_nesting = 0; // decide() recursion level; 0 = outermost
    Trace* trace = nullptr;

    static AnalysisContext tracked(const Budgets& b, Trace* t = nullptr) {
        AnalysisContext ctx;
        ctx.budgets = b;
        ctx.mode = AnalysisMode::Tracked;
        ctx.trace = t;
        return ctx;
    }
    static AnalysisContext fresh(const Budgets& b, Trace* t = nullptr) {
        AnalysisContext ctx;
        ctx.budgets = b;
        ctx.mode = AnalysisMode::Fresh;
        ctx.trace = t;
        return ctx;
    }

    bool contains(const AnalysisEntry& e) const {
        for (const auto& live : entries)
            if (live == e) return true;
        return false;
    }
};

// Control-flow signal raised on a duplicate push attempt in Tracked mode.
// A repeated request cannot return — honoring it would recreate the pending
// computation verbatim — so no intermediate analysis on the way down can
// deliver a value either. The signal therefore unwinds to the outermost
// decide(), which converts it into the verdict 'no' with an AnalysisRegress
// proof.
struct AnalysisRegressSignal {
    AnalysisEntry entry;
};

} // namespace haltkit
