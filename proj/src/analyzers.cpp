#include "haltkit/analyzers.hpp"

#include "haltkit/parse.hpp"
#include "haltkit/refgraph.hpp"
#include "haltkit/render.hpp"

namespace haltkit {

namespace {

// Counts an analysis as in flight for the duration of a scope. The depth
// budget is the only thing that bounds Fresh-mode towers.
struct DepthGuard {
    AnalysisContext& ctx;
    explicit DepthGuard(AnalysisContext& c) : ctx(c) {
        if (++ctx.depth > ctx.budgets.max_analysis_depth) throw BudgetError("max_analysis_depth");
    }
    ~DepthGuard() { --ctx.depth; }
};

// Tracked-mode entry bookkeeping, trace events included. Pops on unwind too,
// so a regress signal passing through leaves the stack consistent.
struct EntryGuard {
    AnalysisContext& ctx;
    EntryGuard(AnalysisContext& c, AnalysisEntry entry) : ctx(c) {
        if (ctx.trace != nullptr) {
            TraceEvent e{};
            e.type = TraceEventType::AnalysisPush;
            e.analyzer = entry.analyzer;
            e.fingerprint = entry.fingerprint;
            e.input = entry.input;
            ctx.trace->emit(e);
        }
        ctx.entries.push_back(std::move(entry));
    }
    ~EntryGuard() {
        ctx.entries.pop_back();
        if (ctx.trace != nullptr) {
            TraceEvent e{};
            e.type = TraceEventType::AnalysisPop;
            ctx.trace->emit(e);
        }
    }
};

} // namespace

std::string resolve_subject_text(const Dictionary& dict, const std::string& name_or_text) {
    if (dict.has_entry(name_or_text)) return dict.entry(name_or_text).source;
    return name_or_text;
}

AnalysisResult analyze_in(const Analyzer& analyzer, const Dictionary& dict,
                          const std::string& subject_text, const std::string& input,
                          AnalysisContext& ctx) {
    const std::string text = resolve_subject_text(dict, subject_text);
    const std::optional<ProcDecl> decl = try_parse_decl(text, analyzer.domain_dialect);
    if (!decl || !validate_signature(*decl)) return {Verdict::NotApplicable, {}};

    // The subject must be analyzable under its own declared name. A name held
    // by an intrinsic has no text to compare against; a name held by a
    // canonically different entry would make the analysis ambiguous.
    Dictionary local = dict;
    if (dict.has_intrinsic(decl->name)) return {Verdict::NotApplicable, {}};
    if (dict.has_entry(decl->name)) {
        if (render(*decl) != render(dict.entry(decl->name))) return {Verdict::NotApplicable, {}};
    } else {
        local = dict.with_entry(*decl);
    }

    // The self-reference guard: a limited analyzer refuses to be exact about
    // any subject whose reference closure reaches the analyzer's own name.
    if (analyzer.mode == AnalyzerMode::Limited && refers(local, decl->name, analyzer.self_name))
        return {Verdict::Maybe, {}};

    const AnalysisEntry entry{analyzer.self_name, fingerprint(*decl), input};
    DepthGuard depth(ctx);

    if (ctx.mode == AnalysisMode::Tracked) {
        if (ctx.contains(entry)) {
            // This exact analysis is already in progress: answering the new
            // request means re-doing the pending one, which would arrive back
            // here. The request can never be answered.
            if (ctx.trace != nullptr) {
                TraceEvent e{};
                e.type = TraceEventType::AnalysisRegress;
                e.analyzer = entry.analyzer;
                e.fingerprint = entry.fingerprint;
                e.input = entry.input;
                ctx.trace->emit(e);
            }
            throw AnalysisRegressSignal{entry};
        }
        EntryGuard tracked(ctx, entry);
        const DecideResult r = decide(local, decl->name, input, ctx);
        return {r.verdict, r.proof};
    }

    const DecideResult r = decide(local, decl->name, input, ctx);
    return {r.verdict, r.proof};
}

AnalysisResult analyze(const Analyzer& analyzer, const Dictionary& dict,
                       const std::string& subject_text, const std::string& input,
                       const Budgets& budgets, Trace* trace) {
    AnalysisContext ctx = AnalysisContext::tracked(budgets, trace);
    return analyze_in(analyzer, dict, subject_text, input, ctx);
}

AnalysisResult analyze_unlimited(const Dictionary& dict, const std::string& subject_text,
                                 const std::string& input, const Budgets& budgets, Trace* trace) {
    const Analyzer u{std::string(unlimited_analyzer_name), AnalyzerMode::Unlimited,
                     Dialect::Plain};
    AnalysisContext ctx = AnalysisContext::tracked(budgets, trace);
    return analyze_in(u, dict, subject_text, input, ctx);
}

Analyzer make_halts(Dictionary& dict, const std::string& self_name) {
    if (!is_valid_identifier(self_name, Dialect::Plain))
        throw NameError("'" + self_name + "' is not a valid plain-dialect identifier");

    const Analyzer a{self_name, AnalyzerMode::Limited, Dialect::Plain};
    Intrinsic intr;
    intr.name = self_name;
    intr.declared_refs = {self_name}; // any halting analyzer's text would name itself
    intr.semantics = [a](const Dictionary& d, const std::string& subject,
                         const std::string& input, AnalysisContext& ctx) {
        return analyze_in(a, d, subject, input, ctx).verdict;
    };
    dict = dict.with_intrinsic(std::move(intr));
    return a;
}

Intrinsic register_ihalts(Dictionary& dict) {
    const Analyzer u{std::string(unlimited_analyzer_name), AnalyzerMode::Unlimited,
                     Dialect::Plain};
    Intrinsic intr;
    intr.name = "ihalts";
    intr.declared_refs = {std::string(unlimited_analyzer_name)};
    intr.semantics = [u](const Dictionary& d, const std::string& subject,
                         const std::string& input, AnalysisContext& ctx) {
        return analyze_in(u, d, subject, input, ctx).verdict;
    };
    dict = dict.with_intrinsic(intr);
    return intr;
}

void register_standard_analyzers(Dictionary& dict) {
    if (!dict.has_intrinsic("halts1")) make_halts(dict, "halts1");
    if (!dict.has_intrinsic("halts2")) make_halts(dict, "halts2");
    if (!dict.has_intrinsic("ihalts")) register_ihalts(dict);
}

std::string make_diag(const std::string& halts_name, const std::string& diag_name) {
    if (!is_valid_identifier(halts_name, Dialect::Plain))
        throw NameError("'" + halts_name + "' is not a valid plain-dialect identifier");
    if (!is_valid_identifier(diag_name, Dialect::Plain))
        throw NameError("'" + diag_name + "' is not a valid plain-dialect identifier");

    ProcDecl decl;
    decl.name = diag_name;
    decl.param = "s";
    decl.body = if_stmt(fn_call(halts_name, var("s"), var("s")), lit("yes"),
                        call_stmt(diag_name, var("s")));
    decl.dialect = Dialect::Plain;
    decl.source = render(decl);
    return decl.source;
}

} // namespace haltkit
