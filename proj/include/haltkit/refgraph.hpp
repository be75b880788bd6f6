#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>

#include "haltkit/dictionary.hpp"

namespace haltkit {

// How a reference is made. All three count equally: a name in a comment or a
// quoted string is as much a reference as a call. That breadth is the point —
// the limited analyzers' caution is triggered by any mention whatsoever.
enum class RefKind { IdentifierUse, StringLiteralMention, CommentMention };

const char* to_string(RefKind kind);

using RefKindSet = std::set<RefKind>;
using EdgeMap = std::map<std::string, RefKindSet>; // target -> kinds

struct RefGraph {
    std::set<std::string> nodes;
    std::map<std::string, EdgeMap> edges; // source -> (target -> kinds)
};

// Names `decl` mentions that resolve to dictionary entries or intrinsics.
// An identifier token counts, as does a maximal identifier-shaped substring
// inside a string literal or comment. The declaration's own defining
// occurrences (the header name, the parameter) do not count; uses in the
// body do, so directly recursive procedures reference themselves.
EdgeMap direct_refs(const ProcDecl& decl, const Dictionary& dict);

// Whole-dictionary graph: entries contribute text-derived edges, intrinsics
// their declared reference sets. Declared targets become nodes even when
// they name nothing callable (an analyzer can be referenced without being
// reachable from object code).
RefGraph build_ref_graph(const Dictionary& dict);

// Least fixed point of direct references starting from `from` (an entry or
// intrinsic; otherwise NameError). `from` itself is a member only when some
// reference chain leads back to it. `visit_count`, when given, receives the
// number of nodes expanded — each at most once.
std::set<std::string> ref_closure(const Dictionary& dict, const std::string& from,
                                  std::size_t* visit_count = nullptr);

// to ∈ ref_closure(from).
bool refers(const Dictionary& dict, const std::string& from, const std::string& to);

// Human-readable adjacency listing, deterministically ordered.
std::string ref_graph_to_text(const RefGraph& graph);

} // namespace haltkit
