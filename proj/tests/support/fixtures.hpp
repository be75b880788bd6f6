#pragma once

#include <string>

#include "haltkit/corpus.hpp"

namespace haltkit::testsupport {

inline std::string plain_corpus_dir() { return HALTKIT_CORPUS_PLAIN; }
inline std::string underscored_corpus_dir() { return HALTKIT_CORPUS_UNDERSCORED; }
inline std::string cli_path() { return HALTKIT_CLI_PATH; }

// Loaded once; the dictionary is immutable, so sharing is safe.
inline const Dictionary& bundled_corpus() {
    static const Dictionary dict = load_corpus(plain_corpus_dir());
    return dict;
}

} // namespace haltkit::testsupport
