#include "haltkit/parse.hpp"

#include <utility>

#include "haltkit/token.hpp"

namespace haltkit {

namespace {

// Recursive descent over the token stream. Comment tokens are collected into
// the declaration (in order) wherever they appear and are otherwise invisible
// to the grammar.
class Parser {
public:
    Parser(std::string_view text, Dialect dialect)
        : text_(text), dialect_(dialect), tokens_(tokenize(text, dialect)) {}

    ProcDecl parse_decl() {
        ProcDecl decl;
        decl.dialect = dialect_;
        decl.source = std::string(text_);

        expect_keyword("procedure");
        decl.name = expect_identifier("procedure name");
        expect_punct("(");
        decl.param = expect_identifier("parameter name");
        expect_punct(":");
        expect_keyword("string");
        expect_punct(")");
        expect_punct(";");
        expect_keyword("begin");
        decl.body = statement_list();
        expect_keyword("end");
        if (at_punct(";")) advance();
        if (!at_end()) fail("end of input");
        decl.comments = std::move(comments_);
        return decl;
    }

private:
    StmtPtr statement_list() {
        // Zero or more statements, ';'-separated, optional ';' before 'end'.
        std::vector<StmtPtr> items;
        while (!at_keyword("end") && !at_end()) {
            items.push_back(statement());
            if (at_punct(";")) {
                advance();
                continue;
            }
            break;
        }
        return seq(std::move(items));
    }

    StmtPtr statement() {
        if (at_keyword("begin")) {
            advance();
            StmtPtr block = statement_list();
            expect_keyword("end");
            return block;
        }
        if (at_keyword("if")) {
            advance();
            ExprPtr lhs = expression();
            expect_punct("=");
            ExprPtr rhs = expression();
            expect_keyword("then");
            StmtPtr then_branch = statement();
            StmtPtr else_branch;
            if (at_keyword("else")) {
                advance();
                else_branch = statement();
            }
            return if_stmt(std::move(lhs), std::move(rhs), std::move(then_branch),
                           std::move(else_branch));
        }
        if (at_keyword("print")) {
            advance();
            expect_punct("(");
            ExprPtr arg = expression();
            expect_punct(")");
            return print_stmt(std::move(arg));
        }
        if (at_keyword("skip")) {
            advance();
            return skip_stmt();
        }
        if (at(TokenKind::Identifier)) {
            std::string callee = advance().lexeme;
            expect_punct("(");
            ExprPtr arg = expression();
            expect_punct(")");
            return call_stmt(std::move(callee), std::move(arg));
        }
        fail("a statement");
    }

    ExprPtr expression() {
        // Concatenation is the only operator, left-associative.
        ExprPtr e = term();
        while (at_punct("+")) {
            advance();
            e = concat(std::move(e), term());
        }
        return e;
    }

    ExprPtr term() {
        if (at(TokenKind::StringLit)) return lit(string_lit_value(advance()));
        if (at_punct("(")) {
            advance();
            ExprPtr e = expression();
            expect_punct(")");
            return e;
        }
        if (at(TokenKind::Identifier)) {
            std::string name = advance().lexeme;
            if (!at_punct("(")) return var(std::move(name));
            // Function calls take exactly two arguments.
            advance();
            ExprPtr a1 = expression();
            expect_punct(",");
            ExprPtr a2 = expression();
            expect_punct(")");
            return fn_call(std::move(name), std::move(a1), std::move(a2));
        }
        fail("an expression");
    }

    // --- token plumbing -----------------------------------------------------

    void skip_comments() {
        while (pos_ < tokens_.size() && tokens_[pos_].kind == TokenKind::Comment) {
            comments_.push_back(comment_text(tokens_[pos_]));
            ++pos_;
        }
    }

    bool at_end() {
        skip_comments();
        return pos_ >= tokens_.size();
    }

    const Token* peek() {
        skip_comments();
        return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr;
    }

    bool at(TokenKind kind) {
        const Token* t = peek();
        return t != nullptr && t->kind == kind;
    }

    bool at_keyword(std::string_view word) {
        const Token* t = peek();
        return t != nullptr && t->kind == TokenKind::Keyword && t->lexeme == word;
    }

    bool at_punct(std::string_view p) {
        const Token* t = peek();
        return t != nullptr && t->kind == TokenKind::Punct && t->lexeme == p;
    }

    const Token& advance() {
        skip_comments();
        return tokens_[pos_++];
    }

    void expect_keyword(std::string_view word) {
        if (!at_keyword(word)) fail(std::string("'") + std::string(word) + "'");
        advance();
    }

    void expect_punct(std::string_view p) {
        if (!at_punct(p)) fail(std::string("'") + std::string(p) + "'");
        advance();
    }

    std::string expect_identifier(std::string_view what) {
        if (!at(TokenKind::Identifier)) fail(std::string(what));
        return advance().lexeme;
    }

    [[noreturn]] void fail(const std::string& expected) {
        const Token* t = peek();
        const Span at = t != nullptr ? t->span : Span{text_.size(), text_.size()};
        const std::string found = t != nullptr ? "'" + t->lexeme + "'" : "end of input";
        throw ParseError("expected " + expected + ", found " + found, at);
    }

    std::string_view text_;
    Dialect dialect_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<std::string> comments_;
};

} // namespace

ProcDecl parse_decl(std::string_view text, Dialect dialect) {
    return Parser(text, dialect).parse_decl();
}

std::optional<ProcDecl> try_parse_decl(std::string_view text, Dialect dialect,
                                       std::string* error) {
    try {
        return parse_decl(text, dialect);
    } catch (const Error& e) {
        if (error != nullptr) *error = e.what();
        return std::nullopt;
    }
}

bool validate_signature(const ProcDecl& decl) {
    // The grammar admits exactly one parameter of the sole type; any parsed
    // declaration is in the analyzers' domain.
    return !decl.name.empty() && !decl.param.empty();
}

} // namespace haltkit
