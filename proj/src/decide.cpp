#include "haltkit/decide.hpp"

#include "haltkit/interp.hpp"

namespace haltkit {

namespace {

// Restores decide_nesting even when a signal unwinds through us.
struct NestingGuard {
    AnalysisContext& ctx;
    explicit NestingGuard(AnalysisContext& c) : ctx(c) { ++ctx.decide_nesting; }
    ~NestingGuard() { --ctx.decide_nesting; }
};

} // namespace

DecideResult decide(const Dictionary& dict, const std::string& proc, const std::string& input,
                    AnalysisContext& ctx) {
    const bool outermost = ctx.decide_nesting == 0;
    NestingGuard guard(ctx);

    Machine machine(dict, ctx, /*detect_repeats=*/true);
    if (ctx.trace != nullptr) {
        TraceEvent e{};
        e.type = TraceEventType::SimBegin;
        e.proc = proc;
        e.arg = input;
        ctx.trace->emit(e);
    }

    auto finish = [&](const char* detail) {
        if (ctx.trace != nullptr) {
            TraceEvent e{};
            e.type = TraceEventType::SimEnd;
            e.detail = detail;
            ctx.trace->emit(e);
        }
    };

    Config config = machine.initial(proc, input);
    try {
        for (;;) {
            const auto r = machine.step(config);
            if (r.status == Machine::Status::Halted) {
                finish("halted");
                return {Verdict::Yes, {}};
            }
            if (r.status == Machine::Status::Faulted) {
                // A fault ends the computation, so the subject halts.
                finish("fault");
                return {Verdict::Yes, {}};
            }
            if (r.status == Machine::Status::RepeatDetected) {
                finish("call-repeat");
                return {Verdict::No,
                        PendingCallRepeat{r.repeat.proc, r.repeat.arg, r.repeat.frame_depth}};
            }
        }
    } catch (const AnalysisRegressSignal& signal) {
        // The simulated subject requested an analysis that is already in
        // progress. Rerunning it here would reproduce the same request, and
        // so on forever — so the subject does not halt. Only the outermost
        // decision may conclude this: inner simulations are themselves part
        // of the repeating pattern and must unwind.
        if (!outermost) throw;
        finish("analysis-regress");
        return {Verdict::No, AnalysisRegress{signal.entry}};
    }
}

DecideResult decide(const Dictionary& dict, const std::string& proc, const std::string& input,
                    const Budgets& budgets, Trace* trace) {
    AnalysisContext ctx = AnalysisContext::tracked(budgets, trace);
    return decide(dict, proc, input, ctx);
}

bool check_proof(const DivergenceProof& proof, const Trace& trace) {
    // Replay the trace, maintaining one frame stack per live simulation and
    // the stack of in-progress analysis entries.
    std::vector<std::vector<std::pair<std::string, std::string>>> sims;
    std::vector<AnalysisEntry> analyses;

    for (const TraceEvent& e : trace.events) {
        switch (e.type) {
        case TraceEventType::SimBegin:
            sims.emplace_back();
            break;
        case TraceEventType::SimEnd:
            if (sims.empty()) return false;
            sims.pop_back();
            break;
        case TraceEventType::FramePush:
            if (sims.empty()) return false;
            sims.back().emplace_back(e.proc, e.arg);
            break;
        case TraceEventType::FramePop:
            if (sims.empty() || sims.back().empty()) return false;
            sims.back().pop_back();
            break;
        case TraceEventType::AnalysisPush:
            analyses.push_back(AnalysisEntry{e.analyzer, e.fingerprint, e.input});
            break;
        case TraceEventType::AnalysisPop:
            if (analyses.empty()) return false;
            analyses.pop_back();
            break;
        case TraceEventType::CallRepeat: {
            const auto* claim = std::get_if<PendingCallRepeat>(&proof);
            if (claim == nullptr) return false;
            if (e.proc != claim->proc || e.arg != claim->arg) return false;
            if (e.depth != static_cast<long long>(claim->frame_depth)) return false;
            // The claimed pending frame must actually be on the innermost
            // simulation's stack with the claimed procedure and argument.
            if (sims.empty()) return false;
            const auto& frames = sims.back();
            if (claim->frame_depth >= frames.size()) return false;
            const auto& pending = frames[claim->frame_depth];
            return pending.first == claim->proc && pending.second == claim->arg;
        }
        case TraceEventType::AnalysisRegress: {
            const auto* claim = std::get_if<AnalysisRegress>(&proof);
            if (claim == nullptr) return false;
            const AnalysisEntry seen{e.analyzer, e.fingerprint, e.input};
            if (!(seen == claim->entry)) return false;
            // The claimed entry must be in progress at the moment of the
            // repeated request.
            for (const AnalysisEntry& open : analyses)
                if (open == claim->entry) return true;
            return false;
        }
        case TraceEventType::Print:
            break;
        }
    }
    // Trace ended without the decisive event.
    return false;
}

} // namespace haltkit
