#pragma once

#include <string>
#include <vector>

#include "haltkit/analysis.hpp"
#include "haltkit/budgets.hpp"
#include "haltkit/dictionary.hpp"

namespace haltkit {

// One pending activation. `continuation` holds the statements still to run,
// last element next; an empty continuation means the frame is about to
// return. The argument is the frame's entire variable environment — the
// language has exactly one variable per procedure and no assignment.
struct Frame {
    std::string proc;
    std::string arg;
    const ProcDecl* decl = nullptr;
    std::vector<StmtPtr> continuation;
};

// Machine state between steps. Output is deliberately not part of the
// configuration: two configurations are the same program point even when
// different prints led there.
struct Config {
    std::vector<Frame> frames;
};

struct RunOutcome {
    enum class Kind { Halted, Fault, BudgetExceeded };
    Kind kind = Kind::Halted;
    std::string detail; // fault reason, or the name of the exhausted budget
    std::vector<std::string> transcript;
    long long steps = 0;
};

const char* to_string(RunOutcome::Kind kind);

// Small-step engine. Each step executes one statement: conditions and call
// arguments are evaluated within the step, eagerly and left to right.
// Intrinsic calls invoke the bound host analyzer with the analysis context
// threaded through, so nested analyses draw on the same budgets.
//
// Faults (unresolved names, unbound variables, string overflow) end the
// simulation and count as abnormal termination. Budget exhaustion throws
// BudgetError. With detect_repeats set, a Call that matches a pending
// (proc, arg) frame is reported instead of being pushed — by determinism and
// purity it would repeat the pending computation exactly.
class Machine {
public:
    enum class Status { Running, Halted, Faulted, RepeatDetected };

    struct RepeatInfo {
        std::string proc;
        std::string arg;
        std::size_t frame_depth = 0; // index of the matching pending frame
    };

    struct StepResult {
        Status status = Status::Running;
        std::string fault; // Faulted only
        RepeatInfo repeat; // RepeatDetected only
    };

    Machine(const Dictionary& dict, AnalysisContext& ctx, bool detect_repeats);

    Config initial(const std::string& proc, const std::string& input) const;

    StepResult step(Config& config);

    const std::vector<std::string>& transcript() const { return transcript_; }

private:
    std::string eval(const Expr& expr, const Frame& frame);
    std::string checked(std::string value);

    const Dictionary& dict_;
    AnalysisContext& ctx_;
    bool detect_repeats_;
    std::vector<std::string> transcript_;
};

// Runs `proc` on `input` to completion under the budgets. Throws NameError if
// the procedure is unknown; never throws for faults or exhausted budgets —
// both are outcomes.
RunOutcome run(const Dictionary& dict, const std::string& proc, const std::string& input,
               const Budgets& budgets, Trace* trace = nullptr);

} // namespace haltkit
