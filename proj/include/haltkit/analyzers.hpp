#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "haltkit/decide.hpp"
#include "haltkit/dictionary.hpp"

namespace haltkit {

// Limited analyzers answer 'maybe' for any subject that (transitively)
// mentions their own name; on everything else they decide. The unlimited
// analyzer has no 'maybe' — and an Underscored name, so Plain programs cannot
// mention it at all. The guard and the naming restriction are two halves of
// the same bargain: an analyzer is exact exactly where it cannot be turned
// against itself.
enum class AnalyzerMode { Limited, Unlimited };

struct Analyzer {
    std::string self_name;
    AnalyzerMode mode = AnalyzerMode::Limited;
    Dialect domain_dialect = Dialect::Plain; // subjects must be Plain
};

// The unlimited analyzer's identity on the analysis stack. Deliberately not a
// Plain identifier.
constexpr std::string_view unlimited_analyzer_name = "halts_";

struct AnalysisResult {
    Verdict verdict = Verdict::NotApplicable;
    std::optional<DivergenceProof> proof; // populated for 'no'
};

// Creates a limited analyzer and registers an intrinsic of the same name so
// object code can call it. self_name must be a valid Plain identifier, not a
// keyword, and not already in the dictionary. The intrinsic declares a
// reference to itself — its (hypothetical) text would mention its own name.
Analyzer make_halts(Dictionary& dict, const std::string& self_name);

// Registers the Plain-named intrinsic `ihalts`: the unlimited analyzer as
// invocable from object code, carrying analyzer identity "halts_" on the
// analysis stack. That shared identity is what makes a direct analysis and an
// interpreted analysis of the same (subject, input) collide. Declares a
// reference to halts_.
Intrinsic register_ihalts(Dictionary& dict);

// halts1, halts2 and ihalts — the bundled set.
void register_standard_analyzers(Dictionary& dict);

// Host-level analysis of `subject_text` (full source; see
// resolve_subject_text for accepting names) applied to `input`.
//
//   'not applicable' — not a valid Plain one-string-parameter procedure, or
//                      its name is taken by a different text. A valid but
//                      unregistered procedure is adopted into a local
//                      snapshot under its declared name.
//   'maybe'          — limited analyzers only: subject refers to the
//                      analyzer's own name.
//   'yes'/'no'       — decided by simulation.
//
// Budget exhaustion propagates as BudgetError.
AnalysisResult analyze(const Analyzer& analyzer, const Dictionary& dict,
                       const std::string& subject_text, const std::string& input,
                       const Budgets& budgets, Trace* trace = nullptr);

AnalysisResult analyze_unlimited(const Dictionary& dict, const std::string& subject_text,
                                 const std::string& input, const Budgets& budgets,
                                 Trace* trace = nullptr);

// Same, threaded through an existing context (used by intrinsic bindings).
AnalysisResult analyze_in(const Analyzer& analyzer, const Dictionary& dict,
                          const std::string& subject_text, const std::string& input,
                          AnalysisContext& ctx);

// The nemesis constructor: a procedure that asks halts_name about itself and
// does the opposite of a 'yes'. Rendered canonically; always parses.
//
//   procedure <diag_name> (s: string);
//   begin
//     if <halts_name> (s, s) = 'yes' then <diag_name> (s)
//   end
std::string make_diag(const std::string& halts_name, const std::string& diag_name);

// A dictionary entry name resolves to that entry's source; anything else is
// taken as source text itself.
std::string resolve_subject_text(const Dictionary& dict, const std::string& name_or_text);

} // namespace haltkit
