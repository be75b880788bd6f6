#pragma once

#include <string>

#include "haltkit/ast.hpp"

namespace haltkit {

// Canonical source text: LF newlines, two-space indentation, comments on
// their own lines after the header. Rendering then reparsing yields a
// structurally equal declaration, and rendering is idempotent on the result.
std::string render(const ProcDecl& decl);

std::string render_stmt(const Stmt& stmt, int indent = 0);
std::string render_expr(const Expr& expr);

// FNV-1a over the canonical render, as 16 hex digits. Two declarations that
// differ only in layout or comments placement share a fingerprint exactly
// when their canonical renders coincide.
std::string fingerprint(const ProcDecl& decl);

} // namespace haltkit
