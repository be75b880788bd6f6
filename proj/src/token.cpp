#include "haltkit/token.hpp"

#include <cctype>

namespace haltkit {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

bool is_punct(char c) {
    switch (c) {
    case '(':
    case ')':
    case ';':
    case ':':
    case ',':
    case '=':
    case '+':
        return true;
    default:
        return false;
    }
}

} // namespace

std::vector<Token> tokenize(std::string_view text, Dialect dialect) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text.size();

    while (i < n) {
        const char c = text[i];
        if (is_space(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;

        if (c == '{') {
            // Comments do not nest and must close.
            ++i;
            while (i < n && text[i] != '}') ++i;
            if (i == n) throw LexError("unterminated comment", {start, n});
            ++i;
            out.push_back({TokenKind::Comment, std::string(text.substr(start, i - start)), {start, i}});
            continue;
        }

        if (c == '\'') {
            // Single-quoted; a doubled quote stands for one quote. Strings do
            // not span lines.
            ++i;
            for (;;) {
                if (i == n || text[i] == '\n')
                    throw LexError("unterminated string literal", {start, i});
                if (text[i] == '\'') {
                    if (i + 1 < n && text[i + 1] == '\'') {
                        i += 2;
                        continue;
                    }
                    ++i;
                    break;
                }
                ++i;
            }
            out.push_back({TokenKind::StringLit, std::string(text.substr(start, i - start)), {start, i}});
            continue;
        }

        if (is_ident_start(c)) {
            ++i;
            while (i < n && is_ident_char(text[i], dialect)) ++i;
            std::string lexeme(text.substr(start, i - start));
            // In the Plain dialect an underscore after an identifier can only
            // be a dialect violation; report it where it sits.
            if (dialect == Dialect::Plain && i < n && text[i] == '_')
                throw LexError("underscore is not allowed in plain-dialect identifiers",
                               {i, i + 1});
            const TokenKind kind = is_keyword(lexeme) ? TokenKind::Keyword : TokenKind::Identifier;
            out.push_back({kind, std::move(lexeme), {start, i}});
            continue;
        }

        if (is_punct(c)) {
            ++i;
            out.push_back({TokenKind::Punct, std::string(1, c), {start, i}});
            continue;
        }

        if (c == '_' && dialect == Dialect::Plain)
            throw LexError("underscore is not allowed in plain-dialect identifiers", {i, i + 1});
        throw LexError(std::string("illegal character '") + c + "'", {i, i + 1});
    }
    return out;
}

std::string string_lit_value(const Token& token) {
    const std::string& s = token.lexeme;
    std::string value;
    // Skip the enclosing quotes; collapse doubled quotes.
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i] == '\'' && i + 1 < s.size() && s[i + 1] == '\'') {
            value += '\'';
            ++i;
        } else {
            value += s[i];
        }
    }
    return value;
}

std::string comment_text(const Token& token) {
    const std::string& s = token.lexeme;
    return s.substr(1, s.size() - 2);
}

} // namespace haltkit
