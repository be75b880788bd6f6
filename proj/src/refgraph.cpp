#include "haltkit/refgraph.hpp"

#include <deque>
#include <sstream>

#include "haltkit/token.hpp"

namespace haltkit {

const char* to_string(RefKind kind) {
    switch (kind) {
    case RefKind::IdentifierUse:
        return "identifier";
    case RefKind::StringLiteralMention:
        return "string-literal";
    case RefKind::CommentMention:
        return "comment";
    }
    return "";
}

namespace {

// Names mentionable as references: dictionary entries and intrinsics.
bool is_known(const Dictionary& dict, const std::string& name) {
    return dict.has_name(name);
}

// Scans `data` for maximal identifier-shaped substrings (underscored shape,
// so names unspellable in the Plain dialect can still be mentioned in data).
void scan_data(const std::string& data, const Dictionary& dict, RefKind kind, EdgeMap& out) {
    std::size_t i = 0;
    while (i < data.size()) {
        if (!is_ident_start(data[i])) {
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        while (j < data.size() && is_ident_char(data[j], Dialect::Underscored)) ++j;
        std::string word = data.substr(i, j - i);
        if (is_known(dict, word)) out[word].insert(kind);
        i = j;
    }
}

} // namespace

EdgeMap direct_refs(const ProcDecl& decl, const Dictionary& dict) {
    EdgeMap out;
    // The defining occurrences — the header name and the declared parameter —
    // are binders, not references. Their lexically first occurrences are
    // exactly those (the header precedes the body; the parameter's first
    // appearance is its declaration).
    bool name_defined = false;
    bool param_defined = false;
    for (const Token& t : tokenize(decl.source, decl.dialect)) {
        switch (t.kind) {
        case TokenKind::Identifier: {
            if (!name_defined && t.lexeme == decl.name) {
                name_defined = true;
                break;
            }
            if (!param_defined && t.lexeme == decl.param) {
                param_defined = true;
                break;
            }
            if (is_known(dict, t.lexeme)) out[t.lexeme].insert(RefKind::IdentifierUse);
            break;
        }
        case TokenKind::StringLit:
            scan_data(string_lit_value(t), dict, RefKind::StringLiteralMention, out);
            break;
        case TokenKind::Comment:
            scan_data(comment_text(t), dict, RefKind::CommentMention, out);
            break;
        default:
            break;
        }
    }
    return out;
}

RefGraph build_ref_graph(const Dictionary& dict) {
    RefGraph g;
    for (const auto& [name, decl] : dict.entries()) {
        g.nodes.insert(name);
        g.edges[name] = direct_refs(decl, dict);
    }
    for (const auto& [name, intr] : dict.intrinsics()) {
        g.nodes.insert(name);
        EdgeMap em;
        for (const auto& target : intr.declared_refs) {
            em[target].insert(RefKind::IdentifierUse);
            g.nodes.insert(target); // declared targets are nodes by fiat
        }
        g.edges[name] = std::move(em);
    }
    return g;
}

std::set<std::string> ref_closure(const Dictionary& dict, const std::string& from,
                                  std::size_t* visit_count) {
    if (!dict.has_name(from)) throw NameError("unknown name '" + from + "'");

    const RefGraph g = build_ref_graph(dict);
    std::set<std::string> reached;
    std::set<std::string> expanded;
    std::deque<std::string> worklist{from};
    std::size_t visits = 0;

    while (!worklist.empty()) {
        const std::string node = worklist.front();
        worklist.pop_front();
        if (!expanded.insert(node).second) continue;
        ++visits;
        auto it = g.edges.find(node);
        if (it == g.edges.end()) continue;
        for (const auto& [target, _] : it->second) {
            if (reached.insert(target).second) worklist.push_back(target);
        }
    }
    if (visit_count != nullptr) *visit_count = visits;
    return reached;
}

bool refers(const Dictionary& dict, const std::string& from, const std::string& to) {
    return ref_closure(dict, from).count(to) != 0;
}

std::string ref_graph_to_text(const RefGraph& graph) {
    std::ostringstream out;
    for (const auto& node : graph.nodes) {
        out << node;
        auto it = graph.edges.find(node);
        if (it == graph.edges.end() || it->second.empty()) {
            out << " ->\n";
            continue;
        }
        out << " ->";
        for (const auto& [target, kinds] : it->second) {
            out << ' ' << target << '[';
            bool first = true;
            for (RefKind k : kinds) {
                if (!first) out << ',';
                out << to_string(k);
                first = false;
            }
            out << ']';
        }
        out << '\n';
    }
    return out.str();
}

} // namespace haltkit
