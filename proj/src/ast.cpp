#include "haltkit/ast.hpp"

namespace haltkit {

ExprPtr lit(std::string value) {
    return std::make_shared<const Expr>(Expr{Expr::Lit{std::move(value)}});
}

ExprPtr var(std::string name) {
    return std::make_shared<const Expr>(Expr{Expr::Var{std::move(name)}});
}

ExprPtr concat(ExprPtr left, ExprPtr right) {
    return std::make_shared<const Expr>(Expr{Expr::Concat{std::move(left), std::move(right)}});
}

ExprPtr fn_call(std::string callee, ExprPtr arg1, ExprPtr arg2) {
    return std::make_shared<const Expr>(
        Expr{Expr::FnCall{std::move(callee), std::move(arg1), std::move(arg2)}});
}

StmtPtr skip_stmt() {
    static const StmtPtr single = std::make_shared<const Stmt>(Stmt{Stmt::Skip{}});
    return single;
}

StmtPtr seq(std::vector<StmtPtr> items) {
    if (items.empty()) return skip_stmt();
    if (items.size() == 1) return items.front();
    return std::make_shared<const Stmt>(Stmt{Stmt::Seq{std::move(items)}});
}

StmtPtr if_stmt(ExprPtr lhs, ExprPtr rhs, StmtPtr then_branch, StmtPtr else_branch) {
    return std::make_shared<const Stmt>(Stmt{Stmt::If{std::move(lhs), std::move(rhs),
                                                      std::move(then_branch),
                                                      std::move(else_branch)}});
}

StmtPtr call_stmt(std::string callee, ExprPtr arg) {
    return std::make_shared<const Stmt>(Stmt{Stmt::Call{std::move(callee), std::move(arg)}});
}

StmtPtr print_stmt(ExprPtr arg) {
    return std::make_shared<const Stmt>(Stmt{Stmt::Print{std::move(arg)}});
}

bool is_skip(const Stmt& s) {
    return std::holds_alternative<Stmt::Skip>(s.node);
}

bool equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* la = std::get_if<Expr::Lit>(&a.node))
        return la->value == std::get<Expr::Lit>(b.node).value;
    if (const auto* va = std::get_if<Expr::Var>(&a.node))
        return va->name == std::get<Expr::Var>(b.node).name;
    if (const auto* ca = std::get_if<Expr::Concat>(&a.node)) {
        const auto& cb = std::get<Expr::Concat>(b.node);
        return equal(*ca->left, *cb.left) && equal(*ca->right, *cb.right);
    }
    const auto& fa = std::get<Expr::FnCall>(a.node);
    const auto& fb = std::get<Expr::FnCall>(b.node);
    return fa.callee == fb.callee && equal(*fa.arg1, *fb.arg1) && equal(*fa.arg2, *fb.arg2);
}

bool equal(const Stmt& a, const Stmt& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* sa = std::get_if<Stmt::Seq>(&a.node)) {
        const auto& sb = std::get<Stmt::Seq>(b.node);
        if (sa->items.size() != sb.items.size()) return false;
        for (std::size_t i = 0; i < sa->items.size(); ++i)
            if (!equal(*sa->items[i], *sb.items[i])) return false;
        return true;
    }
    if (const auto* ia = std::get_if<Stmt::If>(&a.node)) {
        const auto& ib = std::get<Stmt::If>(b.node);
        if (!equal(*ia->lhs, *ib.lhs) || !equal(*ia->rhs, *ib.rhs)) return false;
        if (!equal(*ia->then_branch, *ib.then_branch)) return false;
        if ((ia->else_branch == nullptr) != (ib.else_branch == nullptr)) return false;
        return ia->else_branch == nullptr || equal(*ia->else_branch, *ib.else_branch);
    }
    if (const auto* ca = std::get_if<Stmt::Call>(&a.node)) {
        const auto& cb = std::get<Stmt::Call>(b.node);
        return ca->callee == cb.callee && equal(*ca->arg, *cb.arg);
    }
    if (const auto* pa = std::get_if<Stmt::Print>(&a.node))
        return equal(*pa->arg, *std::get<Stmt::Print>(b.node).arg);
    return true; // Skip
}

bool equal(const ProcDecl& a, const ProcDecl& b) {
    return a.name == b.name && a.param == b.param && a.dialect == b.dialect &&
           a.comments == b.comments && equal(*a.body, *b.body);
}

} // namespace haltkit
