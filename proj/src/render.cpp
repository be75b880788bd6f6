#include "haltkit/render.hpp"

#include <cstdint>
#include <sstream>

namespace haltkit {

namespace {

std::string escape_lit(const std::string& value) {
    std::string out = "'";
    for (char c : value) {
        out += c;
        if (c == '\'') out += '\'';
    }
    out += '\'';
    return out;
}

std::string indent_of(int indent) {
    return std::string(static_cast<std::size_t>(indent) * 2, ' ');
}

// A branch is a single statement; a sequence in branch position becomes an
// inline begin/end block.
std::string render_branch(const Stmt& s, int indent);

void render_lines(const Stmt& s, int indent, std::ostringstream& out) {
    if (const auto* sq = std::get_if<Stmt::Seq>(&s.node)) {
        for (std::size_t i = 0; i < sq->items.size(); ++i) {
            out << indent_of(indent) << render_stmt(*sq->items[i], indent);
            if (i + 1 < sq->items.size()) out << ';';
            out << '\n';
        }
        return;
    }
    out << indent_of(indent) << render_stmt(s, indent) << '\n';
}

std::string render_branch(const Stmt& s, int indent) {
    if (std::holds_alternative<Stmt::Seq>(s.node)) {
        std::ostringstream out;
        out << "begin\n";
        render_lines(s, indent + 1, out);
        out << indent_of(indent) << "end";
        return out.str();
    }
    return render_stmt(s, indent);
}

// True when the statement's trailing then/else spine ends in an else-less if,
// to which a following 'else' would wrongly attach on reparse.
bool has_dangling_else(const Stmt& s) {
    if (const auto* i = std::get_if<Stmt::If>(&s.node))
        return i->else_branch == nullptr || has_dangling_else(*i->else_branch);
    return false;
}

std::string render_block(const Stmt& s, int indent) {
    std::ostringstream out;
    out << "begin\n";
    render_lines(s, indent + 1, out);
    out << indent_of(indent) << "end";
    return out.str();
}

} // namespace

std::string render_expr(const Expr& e) {
    if (const auto* l = std::get_if<Expr::Lit>(&e.node)) return escape_lit(l->value);
    if (const auto* v = std::get_if<Expr::Var>(&e.node)) return v->name;
    if (const auto* c = std::get_if<Expr::Concat>(&e.node)) {
        // Parenthesize a concat on the right so the left-associative reparse
        // rebuilds the same shape.
        const bool right_nested = std::holds_alternative<Expr::Concat>(c->right->node);
        const std::string rhs = render_expr(*c->right);
        return render_expr(*c->left) + " + " + (right_nested ? "(" + rhs + ")" : rhs);
    }
    const auto& f = std::get<Expr::FnCall>(e.node);
    return f.callee + " (" + render_expr(*f.arg1) + ", " + render_expr(*f.arg2) + ")";
}

std::string render_stmt(const Stmt& s, int indent) {
    if (std::holds_alternative<Stmt::Seq>(s.node)) {
        std::ostringstream out;
        out << "begin\n";
        render_lines(s, indent + 1, out);
        out << indent_of(indent) << "end";
        return out.str();
    }
    if (const auto* i = std::get_if<Stmt::If>(&s.node)) {
        const bool guard = i->else_branch != nullptr &&
                           !std::holds_alternative<Stmt::Seq>(i->then_branch->node) &&
                           has_dangling_else(*i->then_branch);
        std::string text = "if " + render_expr(*i->lhs) + " = " + render_expr(*i->rhs) +
                           " then " +
                           (guard ? render_block(*i->then_branch, indent)
                                  : render_branch(*i->then_branch, indent));
        if (i->else_branch != nullptr)
            text += " else " + render_branch(*i->else_branch, indent);
        return text;
    }
    if (const auto* c = std::get_if<Stmt::Call>(&s.node))
        return c->callee + " (" + render_expr(*c->arg) + ")";
    if (const auto* p = std::get_if<Stmt::Print>(&s.node))
        return "print (" + render_expr(*p->arg) + ")";
    return "skip";
}

std::string render(const ProcDecl& decl) {
    std::ostringstream out;
    out << "procedure " << decl.name << " (" << decl.param << ": string);\n";
    for (const auto& c : decl.comments) out << '{' << c << "}\n";
    out << "begin\n";
    if (!is_skip(*decl.body)) render_lines(*decl.body, 1, out);
    out << "end\n";
    return out.str();
}

std::string fingerprint(const ProcDecl& decl) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : render(decl)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string hex(16, '0');
    for (int i = 15; i >= 0; --i) {
        hex[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return hex;
}

} // namespace haltkit
