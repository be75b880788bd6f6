#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "haltkit/dialect.hpp"

namespace haltkit {

struct Expr;
struct Stmt;
using ExprPtr = std::shared_ptr<const Expr>;
using StmtPtr = std::shared_ptr<const Stmt>;

// Expressions denote strings. Concatenation is the only operator; function
// calls always take exactly two arguments and can only resolve to registered
// intrinsics at evaluation time.
struct Expr {
    struct Lit {
        std::string value;
    };
    struct Var {
        std::string name;
    };
    struct Concat {
        ExprPtr left;
        ExprPtr right;
    };
    struct FnCall {
        std::string callee;
        ExprPtr arg1;
        ExprPtr arg2;
    };
    using Node = std::variant<Lit, Var, Concat, FnCall>;
    Node node;
};

struct Stmt {
    struct Seq {
        std::vector<StmtPtr> items; // always >= 2 after normalization
    };
    struct If {
        ExprPtr lhs;
        ExprPtr rhs;
        StmtPtr then_branch;
        StmtPtr else_branch; // may be null
    };
    struct Call {
        std::string callee;
        ExprPtr arg;
    };
    struct Print {
        ExprPtr arg;
    };
    struct Skip {};
    using Node = std::variant<Seq, If, Call, Print, Skip>;
    Node node;
};

// One procedure declaration. Values are immutable after construction and are
// shared freely via the StmtPtr/ExprPtr aliases.
struct ProcDecl {
    std::string name;
    std::string param; // exactly one parameter, of the sole type (string)
    StmtPtr body;
    std::vector<std::string> comments; // inner texts, in source order
    Dialect dialect = Dialect::Plain;
    std::string source; // the text this declaration was parsed from
};

ExprPtr lit(std::string value);
ExprPtr var(std::string name);
ExprPtr concat(ExprPtr left, ExprPtr right);
ExprPtr fn_call(std::string callee, ExprPtr arg1, ExprPtr arg2);

// seq() normalizes: zero statements collapse to skip, one to the statement
// itself, so Seq nodes always hold at least two items.
StmtPtr seq(std::vector<StmtPtr> items);
StmtPtr if_stmt(ExprPtr lhs, ExprPtr rhs, StmtPtr then_branch, StmtPtr else_branch = nullptr);
StmtPtr call_stmt(std::string callee, ExprPtr arg);
StmtPtr print_stmt(ExprPtr arg);
StmtPtr skip_stmt();

bool is_skip(const Stmt& s);

// Structural equality; layout and the recorded source text do not matter.
bool equal(const Expr& a, const Expr& b);
bool equal(const Stmt& a, const Stmt& b);
bool equal(const ProcDecl& a, const ProcDecl& b);

} // namespace haltkit
