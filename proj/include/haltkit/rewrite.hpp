#pragma once

#include <string>
#include <string_view>

#include "haltkit/dialect.hpp"

namespace haltkit {

// Two notions of "rename x to y":
//   IdentifiersOnly — identifier tokens only; string literals and comments
//                     are left alone, so quoted mentions keep their spelling.
//   Thorough        — additionally rewrites mentions inside string literals
//                     and comments, where a mention is an occurrence of the
//                     name as a maximal identifier-shaped substring.
// The distinction is observable: a procedure that prints its own name keeps
// its old output under the first mode and tracks the new name under the
// second.
enum class RenameMode { IdentifiersOnly, Thorough };

// Renames old_name to new_name throughout `text`. Whitespace and everything
// not renamed survive verbatim. Errors: invalid identifiers for the dialect,
// or new_name colliding with a keyword.
std::string rename_ident(std::string_view text, Dialect dialect,
                         std::string_view old_name, std::string_view new_name,
                         RenameMode mode);

// Deletes underscores from every identifier of an Underscored-dialect text so
// the result lexes under Plain. Mode controls literals/comments as above
// (Thorough rewrites mentions of the text's own identifiers). Raises a
// NameError when two distinct identifiers collide after stripping, or when a
// stripped identifier lands on a keyword.
std::string strip_underscores(std::string_view text, RenameMode mode);

} // namespace haltkit
