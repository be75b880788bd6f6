#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "haltkit/ast.hpp"

namespace haltkit {

// Parses a single procedure declaration:
//
//   procedure <name> (<param>: string);
//   begin <statements> end
//
// Statements are separated by semicolons (one is also allowed before `end`);
// comments may appear between any two tokens and are collected in order.
// Throws LexError/ParseError with a span and an expected-token description.
ProcDecl parse_decl(std::string_view text, Dialect dialect);

// Non-throwing variant used where failure just means "not a procedure".
std::optional<ProcDecl> try_parse_decl(std::string_view text, Dialect dialect,
                                       std::string* error = nullptr);

// A declaration the analyzers accept: exactly one string parameter. The
// grammar already guarantees this, so the check is an explicit tautology that
// keeps the acceptance condition in one place.
bool validate_signature(const ProcDecl& decl);

} // namespace haltkit
