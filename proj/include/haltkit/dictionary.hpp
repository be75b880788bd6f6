#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "haltkit/analysis.hpp"
#include "haltkit/ast.hpp"
#include "haltkit/diagnostics.hpp"
#include "haltkit/verdict.hpp"

namespace haltkit {

class Dictionary;

// Host-implemented function callable from object code. Arity is fixed at
// two: an intrinsic always receives (subject, input) and yields a verdict
// string. The analysis context carries budgets and in-progress analyses.
using IntrinsicFn = std::function<Verdict(const Dictionary&, const std::string& subject,
                                          const std::string& input, AnalysisContext&)>;

struct Intrinsic {
    std::string name;
    std::set<std::string> declared_refs; // reference edges, since there is no text
    IntrinsicFn semantics;
};

// Immutable name -> declaration mapping plus registered intrinsics. Names are
// unique across both maps. Mutation builds a new snapshot (`with_*`), so a
// dictionary in use by a simulation can never change underneath it.
class Dictionary {
public:
    Dictionary() = default;
    explicit Dictionary(Dialect dialect) : dialect_(dialect) {}

    Dialect dialect() const { return dialect_; }

    bool has_entry(const std::string& name) const { return entries_.count(name) != 0; }
    bool has_intrinsic(const std::string& name) const { return intrinsics_.count(name) != 0; }
    bool has_name(const std::string& name) const { return has_entry(name) || has_intrinsic(name); }

    const ProcDecl& entry(const std::string& name) const;
    const Intrinsic& intrinsic(const std::string& name) const;

    const std::map<std::string, ProcDecl>& entries() const { return entries_; }
    const std::map<std::string, Intrinsic>& intrinsics() const { return intrinsics_; }

    std::vector<std::string> entry_names() const;
    std::vector<std::string> intrinsic_names() const;

    // Throw NameError on any name collision (entry or intrinsic).
    Dictionary with_entry(ProcDecl decl) const;
    Dictionary with_intrinsic(Intrinsic intr) const;

private:
    Dialect dialect_ = Dialect::Plain;
    std::map<std::string, ProcDecl> entries_;
    std::map<std::string, Intrinsic> intrinsics_;
};

} // namespace haltkit
