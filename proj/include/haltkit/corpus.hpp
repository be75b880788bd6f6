#pragma once

#include <filesystem>
#include <string>

#include "haltkit/dictionary.hpp"

namespace haltkit {

// One declaration per file; the filename must be the declared name plus the
// dialect extension (.ml0 for Plain, .ml_ for Underscored), which keeps the
// name->file mapping honest by construction. Loading registers the standard
// analyzers (halts1, halts2, ihalts). Errors: mixed extensions, duplicate
// names, filename/name mismatches, and anything the parser rejects.
Dictionary load_corpus(const std::filesystem::path& dir);

// Parses `text` under the dictionary's dialect and returns an extended
// snapshot. NameError on duplicates (entries and intrinsics alike).
Dictionary add_decl(const Dictionary& dict, const std::string& text);

// Writes each entry's canonical render to <name><extension> in `dir`.
void save_corpus(const Dictionary& dict, const std::filesystem::path& dir);

} // namespace haltkit
