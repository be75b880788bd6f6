#include "haltkit/dialect.hpp"

#include <algorithm>
#include <cctype>

namespace haltkit {

std::string_view extension_for(Dialect dialect) {
    return dialect == Dialect::Plain ? plain_extension : underscored_extension;
}

std::string_view dialect_name(Dialect dialect) {
    return dialect == Dialect::Plain ? "plain" : "underscored";
}

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool is_ident_char(char c, Dialect dialect) {
    if (std::isalnum(static_cast<unsigned char>(c)) != 0) return true;
    return dialect == Dialect::Underscored && c == '_';
}

bool is_valid_identifier(std::string_view text, Dialect dialect) {
    if (text.empty() || !is_ident_start(text.front())) return false;
    if (!std::all_of(text.begin() + 1, text.end(),
                     [dialect](char c) { return is_ident_char(c, dialect); }))
        return false;
    return !is_keyword(text);
}

const std::vector<std::string>& keywords() {
    // 'while' stays reserved even though the language has no loops; recursion
    // is the only way to not terminate, which is what makes pending-call
    // repetition a complete divergence test.
    static const std::vector<std::string> words = {
        "begin", "else", "end", "if", "print", "procedure",
        "skip", "string", "then", "while",
    };
    return words;
}

bool is_keyword(std::string_view word) {
    const auto& ws = keywords();
    return std::find(ws.begin(), ws.end(), word) != ws.end();
}

} // namespace haltkit
