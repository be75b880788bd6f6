#include "haltkit/rewrite.hpp"

#include <functional>
#include <map>
#include <set>

#include "haltkit/diagnostics.hpp"
#include "haltkit/token.hpp"

namespace haltkit {

namespace {

// Rewrites each maximal identifier-shaped substring of `s` (underscored
// shape, so names like "A_" are one unit even inside Plain-dialect string
// data) through `subst`. Everything else is copied verbatim.
std::string map_mentions(const std::string& s,
                         const std::function<std::string(const std::string&)>& subst) {
    std::string out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (!is_ident_start(s[i])) {
            out += s[i++];
            continue;
        }
        std::size_t j = i + 1;
        while (j < s.size() && is_ident_char(s[j], Dialect::Underscored)) ++j;
        out += subst(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string escape_lit(const std::string& value) {
    std::string out = "'";
    for (char c : value) {
        out += c;
        if (c == '\'') out += '\'';
    }
    out += '\'';
    return out;
}

// Re-emits the token stream through `ident` (identifier tokens) and `data`
// (string-literal values and comment texts, or identity outside Thorough
// mode). Whitespace between tokens survives verbatim.
std::string splice(std::string_view text, const std::vector<Token>& tokens, RenameMode mode,
                   const std::function<std::string(const std::string&)>& ident,
                   const std::function<std::string(const std::string&)>& data) {
    std::string out;
    std::size_t prev = 0;
    for (const Token& t : tokens) {
        out += text.substr(prev, t.span.begin - prev);
        switch (t.kind) {
        case TokenKind::Identifier:
            out += ident(t.lexeme);
            break;
        case TokenKind::StringLit:
            if (mode == RenameMode::Thorough)
                out += escape_lit(map_mentions(string_lit_value(t), data));
            else
                out += t.lexeme;
            break;
        case TokenKind::Comment:
            if (mode == RenameMode::Thorough)
                out += "{" + map_mentions(comment_text(t), data) + "}";
            else
                out += t.lexeme;
            break;
        default:
            out += t.lexeme;
        }
        prev = t.span.end;
    }
    out += text.substr(prev);
    return out;
}

std::string stripped_of(const std::string& name) {
    std::string out;
    for (char c : name)
        if (c != '_') out += c;
    return out;
}

} // namespace

std::string rename_ident(std::string_view text, Dialect dialect, std::string_view old_name,
                         std::string_view new_name, RenameMode mode) {
    if (!is_valid_identifier(old_name, dialect))
        throw NameError("'" + std::string(old_name) + "' is not a valid " +
                        std::string(dialect_name(dialect)) + "-dialect identifier");
    if (is_keyword(new_name))
        throw NameError("'" + std::string(new_name) + "' is a keyword");
    if (!is_valid_identifier(new_name, dialect))
        throw NameError("'" + std::string(new_name) + "' is not a valid " +
                        std::string(dialect_name(dialect)) + "-dialect identifier");

    const std::string oldn(old_name);
    const std::string newn(new_name);
    auto subst = [&](const std::string& word) { return word == oldn ? newn : word; };
    return splice(text, tokenize(text, dialect), mode, subst, subst);
}

std::string strip_underscores(std::string_view text, RenameMode mode) {
    const std::vector<Token> tokens = tokenize(text, Dialect::Underscored);

    // Map every identifier of the text to its stripped form up front so
    // collisions are a property of the text, not of rewrite order.
    std::set<std::string> idents;
    for (const Token& t : tokens)
        if (t.kind == TokenKind::Identifier) idents.insert(t.lexeme);

    std::map<std::string, std::string> by_target; // stripped -> original
    for (const auto& name : idents) {
        const std::string target = stripped_of(name);
        if (is_keyword(target))
            throw NameError("stripping '" + name + "' yields the keyword '" + target + "'");
        auto [it, inserted] = by_target.emplace(target, name);
        if (!inserted)
            throw NameError("stripping collides: '" + it->second + "' and '" + name +
                            "' both become '" + target + "'");
    }

    auto strip_ident = [](const std::string& word) { return stripped_of(word); };
    // In data, only rewrite mentions of the text's own identifiers; arbitrary
    // identifier-shaped content is not ours to edit.
    auto strip_data = [&](const std::string& word) {
        return idents.count(word) != 0 ? stripped_of(word) : word;
    };
    return splice(text, tokens, mode, strip_ident, strip_data);
}

} // namespace haltkit
