#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "haltkit/dialect.hpp"
#include "haltkit/diagnostics.hpp"

namespace haltkit {

enum class TokenKind { Keyword, Identifier, StringLit, Comment, Punct };

struct Token {
    TokenKind kind;
    std::string lexeme; // exact source slice, quotes/braces included
    Span span;
};

// Splits `text` into tokens. Comments ("{ ... }", non-nesting) are kept as
// tokens so later passes can see them. Concatenating all lexemes with the
// whitespace between their spans reproduces `text` exactly.
//
// Throws LexError for an illegal character (including '_' in identifier
// position under the Plain dialect) or an unterminated string/comment.
std::vector<Token> tokenize(std::string_view text, Dialect dialect);

// Decoded value of a string-literal token ('' collapses to ').
std::string string_lit_value(const Token& token);

// Inner text of a comment token, braces removed, otherwise verbatim.
std::string comment_text(const Token& token);

} // namespace haltkit
