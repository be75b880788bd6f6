#include "haltkit/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "haltkit/analyzers.hpp"
#include "haltkit/corpus.hpp"
#include "haltkit/experiment.hpp"
#include "haltkit/interp.hpp"
#include "haltkit/json_io.hpp"
#include "haltkit/parse.hpp"
#include "haltkit/refgraph.hpp"
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

std::filesystem::path corpus_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("HALTKIT_CORPUS")) return env;
    return "corpus/plain";
}

std::string trace_to_text(const Trace& trace) {
    std::ostringstream out;
    for (const TraceEvent& e : trace.events) {
        out << to_string(e.type);
        if (!e.proc.empty()) out << ' ' << e.proc;
        if (e.type == TraceEventType::FramePush || e.type == TraceEventType::CallRepeat ||
            e.type == TraceEventType::SimBegin)
            out << " '" << e.arg << '\'';
        if (!e.analyzer.empty()) out << ' ' << e.analyzer << ' ' << e.fingerprint << " '" << e.input << '\'';
        if (!e.detail.empty()) out << ' ' << e.detail;
        if (e.depth >= 0) out << " @" << e.depth;
        out << '\n';
    }
    return out.str();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"analyzers, interpreter and experiments for a two-dialect toy language"};
    app.name("haltkit");
    app.fallthrough();
    app.require_subcommand(1);

    std::string corpus_flag;
    bool as_json = false;
    bool with_trace = false;
    Budgets budgets;
    app.add_option("--corpus", corpus_flag, "corpus directory (default: $HALTKIT_CORPUS or corpus/plain)");
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_flag("--trace", with_trace, "append the simulation trace");
    app.add_option("--max-steps", budgets.max_steps, "statement budget");
    app.add_option("--max-stack", budgets.max_stack_depth, "call-frame budget");
    app.add_option("--max-string", budgets.max_string_len, "string-length budget");
    app.add_option("--max-analysis", budgets.max_analysis_depth, "nested-analysis budget");

    std::string parse_source, parse_dialect = "plain";
    CLI::App* cmd_parse = app.add_subcommand("parse", "parse a declaration and print its canonical form");
    cmd_parse->add_option("source", parse_source, "file path or inline text")->required();
    cmd_parse->add_option("--dialect", parse_dialect, "plain|underscored (files: extension wins)")
        ->check(CLI::IsMember({"plain", "underscored"}));

    std::string refs_name;
    CLI::App* cmd_refs = app.add_subcommand("refs", "print the reference graph, or one name's closure");
    cmd_refs->add_option("name", refs_name, "start of the reference closure");

    std::string run_proc, run_input;
    CLI::App* cmd_run = app.add_subcommand("run", "execute a corpus procedure on an input");
    cmd_run->add_option("procedure", run_proc)->required();
    cmd_run->add_option("input", run_input)->required();

    std::string halts_analyzer, halts_subject, halts_input;
    CLI::App* cmd_halts = app.add_subcommand("halts", "ask an analyzer about subject(input)");
    cmd_halts->add_option("analyzer", halts_analyzer, "halts1, halts2 or halts_")->required();
    cmd_halts->add_option("subject", halts_subject, "corpus name or full source text")->required();
    cmd_halts->add_option("input", halts_input)->required();

    std::string diag_halts, diag_name;
    CLI::App* cmd_diag = app.add_subcommand("diag", "print the nemesis for an analyzer name");
    cmd_diag->add_option("analyzer", diag_halts)->required();
    cmd_diag->add_option("name", diag_name)->required();

    CLI::App* cmd_experiment = app.add_subcommand("experiment", "bundled experiments");
    cmd_experiment->require_subcommand(1);
    CLI::App* cmd_table = cmd_experiment->add_subcommand(
        "paper-table", "re-check the bundled verdict table against the corpus");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    Trace trace;
    Trace* trace_ptr = with_trace ? &trace : nullptr;
    auto emit_trace = [&] {
        if (with_trace && !as_json) out << trace_to_text(trace);
    };

    try {
        if (*cmd_parse) {
            std::string text = parse_source;
            Dialect dialect = parse_dialect == "underscored" ? Dialect::Underscored : Dialect::Plain;
            if (std::filesystem::is_regular_file(parse_source)) {
                const std::string ext = std::filesystem::path(parse_source).extension().string();
                text = read_file(parse_source);
                if (ext == plain_extension) dialect = Dialect::Plain;
                if (ext == underscored_extension) dialect = Dialect::Underscored;
            }
            const ProcDecl decl = parse_decl(text, dialect);
            if (as_json) {
                out << nlohmann::json{{"name", decl.name},
                                      {"param", decl.param},
                                      {"dialect", dialect_name(decl.dialect)},
                                      {"fingerprint", fingerprint(decl)},
                                      {"render", render(decl)}}
                           .dump(2)
                    << '\n';
            } else {
                out << render(decl);
            }
            return 0;
        }

        if (*cmd_refs) {
            const Dictionary dict = load_corpus(corpus_dir(corpus_flag));
            if (refs_name.empty()) {
                const RefGraph graph = build_ref_graph(dict);
                if (as_json)
                    out << ref_graph_to_json(graph).dump(2) << '\n';
                else
                    out << ref_graph_to_text(graph);
            } else {
                const std::set<std::string> closure = ref_closure(dict, refs_name);
                if (as_json) {
                    out << nlohmann::json{{"from", refs_name}, {"closure", closure}}.dump(2)
                        << '\n';
                } else {
                    for (const std::string& name : closure) out << name << '\n';
                }
            }
            return 0;
        }

        if (*cmd_run) {
            const Dictionary dict = load_corpus(corpus_dir(corpus_flag));
            const RunOutcome outcome = run(dict, run_proc, run_input, budgets, trace_ptr);
            if (as_json) {
                nlohmann::json doc = run_outcome_to_json(outcome);
                if (with_trace) doc["trace"] = trace_to_json(trace)["events"];
                out << doc.dump(2) << '\n';
            } else {
                for (const std::string& line : outcome.transcript) out << line << '\n';
                out << "outcome: " << to_string(outcome.kind);
                if (!outcome.detail.empty()) out << " (" << outcome.detail << ')';
                out << '\n';
                emit_trace();
            }
            switch (outcome.kind) {
            case RunOutcome::Kind::Halted:
                return 0;
            case RunOutcome::Kind::Fault:
                return 2;
            case RunOutcome::Kind::BudgetExceeded:
                return 3;
            }
        }

        if (*cmd_halts) {
            const Dictionary dict = load_corpus(corpus_dir(corpus_flag));
            AnalysisResult result;
            if (halts_analyzer == unlimited_analyzer_name) {
                result = analyze_unlimited(dict, halts_subject, halts_input, budgets, trace_ptr);
            } else {
                if (!is_valid_identifier(halts_analyzer, Dialect::Plain))
                    throw NameError("'" + halts_analyzer +
                                    "' is not a valid plain-dialect identifier");
                const Analyzer a{halts_analyzer, AnalyzerMode::Limited, Dialect::Plain};
                result = analyze(a, dict, halts_subject, halts_input, budgets, trace_ptr);
            }
            if (as_json) {
                nlohmann::json doc{{"analyzer", halts_analyzer}, {"verdict", to_string(result.verdict)}};
                doc["proof"] = result.proof ? proof_to_json(*result.proof) : nlohmann::json(nullptr);
                if (with_trace) doc["trace"] = trace_to_json(trace)["events"];
                out << doc.dump(2) << '\n';
            } else {
                out << to_string(result.verdict) << '\n';
                emit_trace();
            }
            return 0;
        }

        if (*cmd_diag) {
            out << make_diag(diag_halts, diag_name);
            return 0;
        }

        if (*cmd_table) {
            const Dictionary dict = load_corpus(corpus_dir(corpus_flag));
            const ExperimentReport report = run_verdict_table(dict, budgets);
            if (as_json)
                out << report_to_json(report).dump(2) << '\n';
            else
                out << report_to_text(report);
            return report.all_passed() ? 0 : 4;
        }
    } catch (const BudgetError& e) {
        out << "unknown (budget)" << '\n';
        err << e.what() << '\n';
        return 3;
    } catch (const LexError& e) {
        err << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

} // namespace haltkit
