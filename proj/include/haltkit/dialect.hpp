#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace haltkit {

// The language comes in two dialects that differ only in the identifier
// alphabet. Plain identifiers are a letter followed by letters and digits;
// Underscored identifiers may also contain underscores. Every Plain program
// is therefore also an Underscored program, but not vice versa: a name such
// as "halts_" cannot even be written down in the Plain dialect.
enum class Dialect { Plain, Underscored };

constexpr std::string_view plain_extension = ".ml0";
constexpr std::string_view underscored_extension = ".ml_";

std::string_view extension_for(Dialect dialect);
std::string_view dialect_name(Dialect dialect);

bool is_ident_start(char c);
bool is_ident_char(char c, Dialect dialect);
bool is_valid_identifier(std::string_view text, Dialect dialect);

// Reserved words, all lowercase; they are never identifiers in either dialect.
const std::vector<std::string>& keywords();
bool is_keyword(std::string_view word);

} // namespace haltkit
