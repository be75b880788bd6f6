#include "haltkit/interp.hpp"

namespace haltkit {

const char* to_string(RunOutcome::Kind kind) {
    switch (kind) {
    case RunOutcome::Kind::Halted:
        return "halted";
    case RunOutcome::Kind::Fault:
        return "fault";
    case RunOutcome::Kind::BudgetExceeded:
        return "budget-exceeded";
    }
    return "";
}

namespace {

// Faults terminate the simulation; the throw just carries the reason to the
// step boundary.
struct FaultSignal {
    std::string reason;
};

} // namespace

Machine::Machine(const Dictionary& dict, AnalysisContext& ctx, bool detect_repeats)
    : dict_(dict), ctx_(ctx), detect_repeats_(detect_repeats) {}

Config Machine::initial(const std::string& proc, const std::string& input) const {
    const ProcDecl& decl = dict_.entry(proc);
    if (ctx_.trace != nullptr) {
        TraceEvent e{};
        e.type = TraceEventType::FramePush;
        e.proc = proc;
        e.arg = input;
        ctx_.trace->emit(e);
    }
    return Config{{Frame{proc, input, &decl, {decl.body}}}};
}

std::string Machine::checked(std::string value) {
    if (static_cast<long long>(value.size()) > ctx_.budgets.max_string_len)
        throw FaultSignal{"string overflow"};
    return value;
}

std::string Machine::eval(const Expr& expr, const Frame& frame) {
    if (const auto* l = std::get_if<Expr::Lit>(&expr.node)) return checked(l->value);
    if (const auto* v = std::get_if<Expr::Var>(&expr.node)) {
        if (v->name != frame.decl->param)
            throw FaultSignal{"unbound variable '" + v->name + "'"};
        return frame.arg;
    }
    if (const auto* c = std::get_if<Expr::Concat>(&expr.node))
        return checked(eval(*c->left, frame) + eval(*c->right, frame));

    const auto& f = std::get<Expr::FnCall>(expr.node);
    const std::string a1 = eval(*f.arg1, frame);
    const std::string a2 = eval(*f.arg2, frame);
    if (!dict_.has_intrinsic(f.callee))
        throw FaultSignal{"unresolved function '" + f.callee + "'"};
    // The analysis context rides along: nested analyses share our budgets and,
    // in Tracked mode, our in-progress entries.
    const Verdict v = dict_.intrinsic(f.callee).semantics(dict_, a1, a2, ctx_);
    return std::string(to_string(v));
}

Machine::StepResult Machine::step(Config& config) {
    if (config.frames.empty()) return {Status::Halted, {}, {}};

    if (++ctx_.steps_used > ctx_.budgets.max_steps) throw BudgetError("max_steps");

    Frame& frame = config.frames.back();
    const StmtPtr stmt = frame.continuation.back();
    frame.continuation.pop_back();

    try {
        if (const auto* sq = std::get_if<Stmt::Seq>(&stmt->node)) {
            for (auto it = sq->items.rbegin(); it != sq->items.rend(); ++it)
                frame.continuation.push_back(*it);
        } else if (const auto* i = std::get_if<Stmt::If>(&stmt->node)) {
            // Exact string equality; both sides evaluated, left first.
            const std::string lhs = eval(*i->lhs, frame);
            const std::string rhs = eval(*i->rhs, frame);
            const StmtPtr branch = lhs == rhs ? i->then_branch : i->else_branch;
            if (branch != nullptr) frame.continuation.push_back(branch);
        } else if (const auto* p = std::get_if<Stmt::Print>(&stmt->node)) {
            const std::string value = eval(*p->arg, frame);
            transcript_.push_back(value);
            if (ctx_.trace != nullptr) {
                TraceEvent e{};
                e.type = TraceEventType::Print;
                e.detail = value;
                ctx_.trace->emit(e);
            }
        } else if (const auto* c = std::get_if<Stmt::Call>(&stmt->node)) {
            const std::string arg = eval(*c->arg, frame);
            if (detect_repeats_) {
                // An identical pending frame means the new call would repeat
                // that computation exactly — calls are by value, procedures
                // are pure, evaluation is deterministic.
                for (std::size_t d = 0; d < config.frames.size(); ++d) {
                    const Frame& pending = config.frames[d];
                    if (pending.proc == c->callee && pending.arg == arg) {
                        if (ctx_.trace != nullptr) {
                            TraceEvent e{};
                            e.type = TraceEventType::CallRepeat;
                            e.proc = c->callee;
                            e.arg = arg;
                            e.depth = static_cast<long long>(d);
                            ctx_.trace->emit(e);
                        }
                        return {Status::RepeatDetected, {}, RepeatInfo{c->callee, arg, d}};
                    }
                }
            }
            if (!dict_.has_entry(c->callee))
                throw FaultSignal{"unresolved procedure '" + c->callee + "'"};
            if (static_cast<int>(config.frames.size()) + 1 > ctx_.budgets.max_stack_depth)
                throw BudgetError("max_stack_depth");
            const ProcDecl& decl = dict_.entry(c->callee);
            if (ctx_.trace != nullptr) {
                TraceEvent e{};
                e.type = TraceEventType::FramePush;
                e.proc = c->callee;
                e.arg = arg;
                ctx_.trace->emit(e);
            }
            config.frames.push_back(Frame{c->callee, arg, &decl, {decl.body}});
        }
        // Skip: nothing to do.
    } catch (const FaultSignal& f) {
        return {Status::Faulted, f.reason, {}};
    }

    // Completed frames return: pop until some frame still has work.
    while (!config.frames.empty() && config.frames.back().continuation.empty()) {
        config.frames.pop_back();
        if (ctx_.trace != nullptr) {
            TraceEvent e{};
            e.type = TraceEventType::FramePop;
            ctx_.trace->emit(e);
        }
    }
    return {config.frames.empty() ? Status::Halted : Status::Running, {}, {}};
}

RunOutcome run(const Dictionary& dict, const std::string& proc, const std::string& input,
               const Budgets& budgets, Trace* trace) {
    // Actual execution: no divergence detection, and analyses spawned by
    // intrinsic calls start fresh — an analyzer invoked from object code has
    // no memory of enclosing analyses, so self-referential analysis towers
    // really do descend until a budget gives out.
    AnalysisContext ctx = AnalysisContext::fresh(budgets, trace);
    Machine machine(dict, ctx, /*detect_repeats=*/false);

    if (trace != nullptr) {
        TraceEvent e{};
        e.type = TraceEventType::SimBegin;
        e.proc = proc;
        e.arg = input;
        trace->emit(e);
    }

    RunOutcome outcome;
    Config config = machine.initial(proc, input);
    try {
        for (;;) {
            const auto r = machine.step(config);
            if (r.status == Machine::Status::Halted) {
                outcome.kind = RunOutcome::Kind::Halted;
                break;
            }
            if (r.status == Machine::Status::Faulted) {
                outcome.kind = RunOutcome::Kind::Fault;
                outcome.detail = r.fault;
                break;
            }
        }
    } catch (const BudgetError& b) {
        outcome.kind = RunOutcome::Kind::BudgetExceeded;
        outcome.detail = b.budget;
    }
    outcome.transcript = machine.transcript();
    outcome.steps = ctx.steps_used;
    if (trace != nullptr) {
        TraceEvent e{};
        e.type = TraceEventType::SimEnd;
        e.detail = to_string(outcome.kind);
        trace->emit(e);
    }
    return outcome;
}

} // namespace haltkit
