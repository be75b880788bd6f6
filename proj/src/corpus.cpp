#include "haltkit/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "haltkit/analyzers.hpp"
#include "haltkit/parse.hpp"
#include "haltkit/render.hpp"

namespace haltkit {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

Dictionary load_corpus(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw Error("corpus directory '" + dir.string() + "' does not exist");

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string ext = entry.path().extension().string();
        if (ext == plain_extension || ext == underscored_extension) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        // An empty directory is a legitimate, empty corpus.
        Dictionary dict(Dialect::Plain);
        register_standard_analyzers(dict);
        return dict;
    }

    const std::string first_ext = files.front().extension().string();
    const Dialect dialect =
        first_ext == plain_extension ? Dialect::Plain : Dialect::Underscored;

    Dictionary dict(dialect);
    for (const auto& file : files) {
        if (file.extension().string() != first_ext)
            throw Error("mixed dialects in '" + dir.string() + "': " +
                        files.front().filename().string() + " vs " + file.filename().string());
        ProcDecl decl = parse_decl(read_file(file), dialect);
        // Duplicate names take precedence over filename mismatches: a second
        // file declaring an existing name is a collision however it is named.
        if (dict.has_name(decl.name)) throw NameError("duplicate name '" + decl.name + "'");
        if (file.filename().string() != decl.name + std::string(extension_for(dialect)))
            throw Error("file '" + file.filename().string() + "' declares '" + decl.name + "'");
        dict = dict.with_entry(std::move(decl));
    }
    register_standard_analyzers(dict);
    return dict;
}

Dictionary add_decl(const Dictionary& dict, const std::string& text) {
    return dict.with_entry(parse_decl(text, dict.dialect()));
}

void save_corpus(const Dictionary& dict, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& [name, decl] : dict.entries()) {
        const std::filesystem::path path = dir / (name + std::string(extension_for(decl.dialect)));
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot write '" + path.string() + "'");
        out << render(decl);
    }
}

} // namespace haltkit
