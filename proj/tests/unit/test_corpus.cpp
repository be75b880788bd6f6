#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "haltkit/analyzers.hpp"
#include "haltkit/corpus.hpp"
#include "haltkit/interp.hpp"
#include "haltkit/parse.hpp"
#include "haltkit/render.hpp"
#include "haltkit/rewrite.hpp"

#include "support/fixtures.hpp"

using namespace haltkit;
using haltkit::testsupport::bundled_corpus;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out);
    out << text;
}

// A scratch directory, removed on scope exit.
struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag)
        : path(fs::temp_directory_path() / ("haltkit-test-" + tag)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("the bundled corpus has the expected shape") {
    const Dictionary& dict = bundled_corpus();
    CHECK(dict.dialect() == Dialect::Plain);
    CHECK(dict.entry_names() == std::vector<std::string>{"both", "diag1", "diag2", "dtower",
                                                         "helper", "loop", "stop"});
    CHECK(dict.intrinsic_names() == std::vector<std::string>{"halts1", "halts2", "ihalts"});
}

TEST_CASE("bundled sources are stored in canonical form") {
    const Dictionary& dict = bundled_corpus();
    for (const auto& [name, decl] : dict.entries()) {
        CAPTURE(name);
        const fs::path file =
            fs::path(haltkit::testsupport::plain_corpus_dir()) / (name + ".ml0");
        CHECK(render(decl) == slurp(file));
        CHECK(decl.source == slurp(file));
    }
}

TEST_CASE("the bundled tower program is a generated nemesis") {
    CHECK(bundled_corpus().entry("dtower").source == make_diag("ihalts", "dtower"));
}

TEST_CASE("an empty directory is an empty corpus, analyzers included") {
    TempDir tmp("empty");
    const Dictionary dict = load_corpus(tmp.path);
    CHECK(dict.entries().empty());
    CHECK(dict.dialect() == Dialect::Plain);
    CHECK(dict.intrinsic_names() == std::vector<std::string>{"halts1", "halts2", "ihalts"});
}

TEST_CASE("a missing directory is an error") {
    CHECK_THROWS_AS(load_corpus("/no/such/haltkit/corpus"), Error);
}

TEST_CASE("loading rejects malformed corpora") {
    SUBCASE("two files declaring the same name") {
        TempDir tmp("dup");
        spit(tmp.path / "p.ml0", "procedure p (s: string); begin end");
        // The collision outranks the second file's own naming problem.
        spit(tmp.path / "q.ml0", "procedure p (s: string); begin skip end");
        CHECK_THROWS_WITH_AS(load_corpus(tmp.path), "duplicate name 'p'", NameError);
    }
    SUBCASE("a file named after somebody else") {
        TempDir tmp("misnamed");
        spit(tmp.path / "a.ml0", "procedure p (s: string); begin end");
        CHECK_THROWS_WITH_AS(load_corpus(tmp.path), "file 'a.ml0' declares 'p'", Error);
    }
    SUBCASE("mixed dialect extensions") {
        TempDir tmp("mixed");
        spit(tmp.path / "p.ml0", "procedure p (s: string); begin end");
        spit(tmp.path / "q_.ml_", "procedure q_ (s: string); begin end");
        CHECK_THROWS_AS(load_corpus(tmp.path), Error);
    }
    SUBCASE("a source that does not parse") {
        TempDir tmp("bad");
        spit(tmp.path / "p.ml0", "procedure p (s: string) begin end"); // missing ';'
        CHECK_THROWS_AS(load_corpus(tmp.path), ParseError);
    }
    SUBCASE("unrelated files are ignored, not parsed") {
        TempDir tmp("noise");
        spit(tmp.path / "notes.txt", "not a program");
        spit(tmp.path / "p.ml0", "procedure p (s: string); begin end");
        CHECK(load_corpus(tmp.path).entry_names() == std::vector<std::string>{"p"});
    }
}

TEST_CASE("add_decl extends a snapshot without touching the original") {
    const Dictionary& base = bundled_corpus();
    const Dictionary grown = add_decl(base, make_diag("halts1", "fresh"));
    CHECK(grown.has_entry("fresh"));
    CHECK_FALSE(base.has_entry("fresh"));
    // The new entry participates in analysis like any bundled one.
    const Analyzer h1{"halts1", AnalyzerMode::Limited, Dialect::Plain};
    CHECK(analyze(h1, grown, "fresh", "fresh", Budgets{}).verdict == Verdict::Maybe);
    CHECK_THROWS_AS(add_decl(grown, "procedure fresh (s: string); begin end"), NameError);
    CHECK_THROWS_AS(add_decl(base, "procedure halts1 (s: string); begin end"), NameError);
}

TEST_CASE("saving and reloading preserves every declaration") {
    TempDir tmp("roundtrip");
    save_corpus(bundled_corpus(), tmp.path);
    const Dictionary reloaded = load_corpus(tmp.path);
    REQUIRE(reloaded.entry_names() == bundled_corpus().entry_names());
    for (const auto& [name, decl] : bundled_corpus().entries()) {
        CAPTURE(name);
        CHECK(render(reloaded.entry(name)) == render(decl));
        CHECK(fingerprint(reloaded.entry(name)) == fingerprint(decl));
    }
}

TEST_CASE("the underscored corpus loads under its own dialect") {
    const Dictionary dict = load_corpus(haltkit::testsupport::underscored_corpus_dir());
    CHECK(dict.dialect() == Dialect::Underscored);
    CHECK(dict.entry_names() == std::vector<std::string>{"A_"});
    CHECK(dict.entry("A_").comments ==
          std::vector<std::string>{" this procedure prints its own name "});
    const RunOutcome out = run(dict, "A_", "x", Budgets{});
    CHECK(out.kind == RunOutcome::Kind::Halted);
    CHECK(out.transcript == std::vector<std::string>{"A_"});
}

TEST_CASE("translating a self-printing program forces a choice") {
    const Dictionary dict = load_corpus(haltkit::testsupport::underscored_corpus_dir());
    const std::string original = dict.entry("A_").source;

    // Conservative: identifiers change, quoted text survives. The program is
    // now named 'A' but still claims to be 'A_' — output preserved, the
    // self-description broken.
    {
        const std::string text = strip_underscores(original, RenameMode::IdentifiersOnly);
        const ProcDecl decl = parse_decl(text, Dialect::Plain);
        CHECK(decl.name == "A");
        const RunOutcome out = run(Dictionary(Dialect::Plain).with_entry(decl), "A", "x",
                                   Budgets{});
        CHECK(out.transcript == std::vector<std::string>{"A_"});
    }

    // Thorough: quoted and commented mentions follow the rename. The program
    // describes itself again — but it no longer prints what the original did.
    {
        const std::string text = strip_underscores(original, RenameMode::Thorough);
        const ProcDecl decl = parse_decl(text, Dialect::Plain);
        CHECK(decl.name == "A");
        CHECK(decl.comments == std::vector<std::string>{" this procedure prints its own name "});
        const RunOutcome out = run(Dictionary(Dialect::Plain).with_entry(decl), "A", "x",
                                   Budgets{});
        CHECK(out.transcript == std::vector<std::string>{"A"});
    }
}
