#include <doctest.h>

#include "haltkit/analyzers.hpp"
#include "haltkit/corpus.hpp"
#include "haltkit/interp.hpp"
#include "haltkit/parse.hpp"
#include "haltkit/refgraph.hpp"
#include "haltkit/render.hpp"

#include "support/fixtures.hpp"

using namespace haltkit;
using haltkit::testsupport::bundled_corpus;

namespace {

Analyzer limited(const std::string& name) {
    return Analyzer{name, AnalyzerMode::Limited, Dialect::Plain};
}

} // namespace

TEST_CASE("the factory registers an intrinsic under the analyzer's name") {
    Dictionary dict(Dialect::Plain);
    const Analyzer a = make_halts(dict, "halts9");
    CHECK(a.self_name == "halts9");
    CHECK(a.mode == AnalyzerMode::Limited);
    REQUIRE(dict.has_intrinsic("halts9"));
    CHECK(dict.intrinsic("halts9").declared_refs == std::set<std::string>{"halts9"});
}

TEST_CASE("the factory rejects unusable names") {
    Dictionary dict(Dialect::Plain);
    CHECK_THROWS_AS(make_halts(dict, "while"), NameError);   // keyword
    CHECK_THROWS_AS(make_halts(dict, "bad_name"), NameError); // not Plain
    CHECK_THROWS_AS(make_halts(dict, "9lives"), NameError);
    make_halts(dict, "mine");
    CHECK_THROWS_AS(make_halts(dict, "mine"), NameError); // taken
}

TEST_CASE("analyze answers the bundled verdict table") {
    const Dictionary& dict = bundled_corpus();
    const Budgets budgets{};

    CHECK(analyze(limited("halts1"), dict, "diag1", "diag1", budgets).verdict == Verdict::Maybe);
    CHECK(analyze(limited("halts2"), dict, "diag1", "diag1", budgets).verdict == Verdict::Yes);
    CHECK(analyze(limited("halts2"), dict, "diag2", "diag2", budgets).verdict == Verdict::Maybe);
    CHECK(analyze(limited("halts1"), dict, "diag2", "diag2", budgets).verdict == Verdict::Yes);
    CHECK(analyze(limited("halts1"), dict, "both", "both", budgets).verdict == Verdict::Maybe);
    CHECK(analyze(limited("halts2"), dict, "both", "both", budgets).verdict == Verdict::Maybe);
}

TEST_CASE("subjects may be names or full texts") {
    const Dictionary& dict = bundled_corpus();
    const Budgets budgets{};
    const std::string text = dict.entry("loop").source;
    CHECK(analyze(limited("halts1"), dict, "loop", "x", budgets).verdict == Verdict::No);
    CHECK(analyze(limited("halts1"), dict, text, "x", budgets).verdict == Verdict::No);
}

TEST_CASE("not applicable: invalid texts and ambiguous names") {
    const Dictionary& dict = bundled_corpus();
    const Budgets budgets{};

    CHECK(analyze(limited("halts1"), dict, "gibberish", "x", budgets).verdict ==
          Verdict::NotApplicable);
    CHECK(analyze(limited("halts1"), dict, "", "x", budgets).verdict == Verdict::NotApplicable);

    // A valid declaration whose name is taken by a canonically different text.
    CHECK(analyze(limited("halts1"), dict, "procedure loop (s: string); begin end", "x", budgets)
              .verdict == Verdict::NotApplicable);
    // Same name, same canonical text (layout differs): analyzable.
    CHECK(analyze(limited("halts1"), dict,
                  "procedure loop (s: string);\nbegin\n  loop (s)\nend\n", "x", budgets)
              .verdict == Verdict::No);
    // A name held by an intrinsic has no text to agree with.
    CHECK(analyze(limited("halts1"), dict, "procedure ihalts (s: string); begin end", "x",
                  budgets)
              .verdict == Verdict::NotApplicable);
    // Underscored texts are outside the Plain analyzers' domain.
    CHECK(analyze(limited("halts1"), dict, "procedure a_b (s: string); begin end", "x", budgets)
              .verdict == Verdict::NotApplicable);
}

TEST_CASE("valid unregistered subjects are adopted for the analysis") {
    const Dictionary& dict = bundled_corpus();
    // 'fresh' is not in the corpus; it must be registered into the local
    // snapshot for its self-call to resolve.
    const AnalysisResult r = analyze(limited("halts1"), dict,
                                     "procedure fresh (s: string);\n"
                                     "begin\n"
                                     "  if s = 'go' then fresh ('stay')\n"
                                     "end\n",
                                     "go", Budgets{});
    CHECK(r.verdict == Verdict::Yes);
    CHECK_FALSE(bundled_corpus().has_entry("fresh")); // the snapshot was local
}

TEST_CASE("the maybe guard fires exactly on reference closure membership") {
    const Dictionary& dict = bundled_corpus();
    const Budgets budgets{};
    for (const std::string analyzer : {"halts1", "halts2"}) {
        for (const auto& [subject, decl] : dict.entries()) {
            (void)decl;
            CAPTURE(analyzer);
            CAPTURE(subject);
            const bool guarded = refers(dict, subject, analyzer);
            Verdict verdict = Verdict::NotApplicable;
            try {
                verdict = analyze(limited(analyzer), dict, subject, subject, budgets).verdict;
            } catch (const BudgetError&) {
                continue;
            }
            CHECK((verdict == Verdict::Maybe) == guarded);
        }
    }
}

TEST_CASE("make_diag emits the canonical nemesis") {
    CHECK(make_diag("halts1", "diag1") == bundled_corpus().entry("diag1").source);
    CHECK(make_diag("ihalts", "dtower") == bundled_corpus().entry("dtower").source);
    CHECK_THROWS_AS(make_diag("halts_", "d"), NameError); // not spellable in Plain
    CHECK_THROWS_AS(make_diag("halts1", "if"), NameError);
}

TEST_CASE("every limited analyzer is defeated by its own nemesis, politely") {
    const Budgets budgets{};
    for (const std::string name : {"halts1", "halts2"}) {
        CAPTURE(name);
        const std::string d = make_diag(name, "nemesis");
        // Asked about its nemesis, the analyzer declines to be exact...
        CHECK(analyze(limited(name), bundled_corpus(), d, d, budgets).verdict == Verdict::Maybe);
        // ...and precisely because it declines, the nemesis terminates.
        const Dictionary dict = add_decl(bundled_corpus(), d);
        const RunOutcome truth = run(dict, "nemesis", d, budgets);
        CHECK(truth.kind == RunOutcome::Kind::Halted);
    }
}

TEST_CASE("renaming alone changes verdicts") {
    const Dictionary& dict = bundled_corpus();
    const Budgets budgets{};
    // Identical factories, different self-names, same subjects — different
    // verdicts in both directions.
    const Verdict one_on_first = analyze(limited("halts1"), dict, "diag1", "diag1", budgets).verdict;
    const Verdict two_on_first = analyze(limited("halts2"), dict, "diag1", "diag1", budgets).verdict;
    const Verdict one_on_second = analyze(limited("halts1"), dict, "diag2", "diag2", budgets).verdict;
    const Verdict two_on_second = analyze(limited("halts2"), dict, "diag2", "diag2", budgets).verdict;
    CHECK(one_on_first != two_on_first);
    CHECK(one_on_second != two_on_second);
    CHECK(one_on_first == two_on_second);   // maybe
    CHECK(two_on_first == one_on_second);   // yes
}

TEST_CASE("the unlimited analyzer has no maybe") {
    const Dictionary& dict = bundled_corpus();
    const Budgets budgets{};
    CHECK(analyze_unlimited(dict, "loop", "x", budgets).verdict == Verdict::No);
    CHECK(analyze_unlimited(dict, "stop", "x", budgets).verdict == Verdict::Yes);
    CHECK(analyze_unlimited(dict, "diag1", "diag1", budgets).verdict == Verdict::Yes);
    // A subject that analyzes analyzers is still decided, not dodged.
    CHECK(analyze_unlimited(dict, "both", "both", budgets).verdict == Verdict::Yes);
}

TEST_CASE("the tower: interpreted self-analysis regresses") {
    const Dictionary& dict = bundled_corpus();
    const Budgets budgets{};

    Trace trace;
    const AnalysisResult r = analyze_unlimited(dict, "dtower", "dtower", budgets, &trace);
    REQUIRE(r.verdict == Verdict::No);
    REQUIRE(r.proof.has_value());
    const auto& regress = std::get<AnalysisRegress>(*r.proof);
    CHECK(regress.entry.analyzer == "halts_");
    CHECK(regress.entry.input == "dtower");
    CHECK(regress.entry.fingerprint == fingerprint(dict.entry("dtower")));
    CHECK(check_proof(*r.proof, trace));

    // The interpreted stack of analyzers never bottoms out: actually running
    // the subject exhausts the analysis-depth budget instead of answering.
    const RunOutcome truth = run(dict, "dtower", "dtower", budgets);
    CHECK(truth.kind == RunOutcome::Kind::BudgetExceeded);
    CHECK(truth.detail == "max_analysis_depth");
}

TEST_CASE("ihalts puts the unlimited analyzer's identity on the stack") {
    const Dictionary& dict = bundled_corpus();
    Trace trace;
    analyze_unlimited(dict, "dtower", "dtower", Budgets{}, &trace);
    bool saw_push = false;
    for (const TraceEvent& e : trace.events) {
        if (e.type == TraceEventType::AnalysisPush) {
            saw_push = true;
            CHECK(e.analyzer == "halts_");
        }
        if (e.type == TraceEventType::AnalysisRegress) CHECK(e.analyzer == "halts_");
    }
    CHECK(saw_push);
}

TEST_CASE("interpreted analysis of a harmless subject just works") {
    const Dictionary dict = add_decl(
        bundled_corpus(),
        "procedure asks (s: string); begin if ihalts (s, 'x') = 'yes' then print ('fine') end");
    // Object code consults the unlimited analyzer about stop and halts.
    CHECK(analyze_unlimited(dict, "asks", "stop", Budgets{}).verdict == Verdict::Yes);
    const RunOutcome truth = run(dict, "asks", "stop", Budgets{});
    CHECK(truth.kind == RunOutcome::Kind::Halted);
    CHECK(truth.transcript == std::vector<std::string>{"fine"});
}

TEST_CASE("subjects that merely mention the unlimited analyzer are not applicable") {
    // halts_ cannot be spelled in a Plain identifier, so such a text is not a
    // Plain program at all.
    CHECK(analyze_unlimited(bundled_corpus(),
                            "procedure evil (s: string); begin halts_ (s, s) end", "x", Budgets{})
              .verdict == Verdict::NotApplicable);
}

TEST_CASE("budget exhaustion in analysis is an error, never a verdict") {
    const Dictionary dict = add_decl(
        bundled_corpus(), "procedure grow (s: string); begin grow (s + 'a') end");
    CHECK_THROWS_AS(analyze(limited("halts1"), dict, "grow", "", Budgets{}), BudgetError);
    CHECK_THROWS_AS(analyze_unlimited(dict, "grow", "", Budgets{}), BudgetError);
}

TEST_CASE("analysis depth is budgeted in tracked mode too") {
    Budgets tiny;
    tiny.max_analysis_depth = 0;
    CHECK_THROWS_AS(analyze_unlimited(bundled_corpus(), "stop", "x", tiny), BudgetError);
}

TEST_CASE("standard registration is idempotent") {
    Dictionary dict = bundled_corpus();
    register_standard_analyzers(dict); // corpus loading already did this once
    CHECK(dict.intrinsic_names() == std::vector<std::string>{"halts1", "halts2", "ihalts"});
}
