#include "haltkit/experiment.hpp"

#include <sstream>

#include "haltkit/analyzers.hpp"
#include "haltkit/interp.hpp"

namespace haltkit {

namespace {

const char* outcome_class(RunOutcome::Kind kind) {
    switch (kind) {
    case RunOutcome::Kind::Halted:
        return "halted";
    case RunOutcome::Kind::Fault:
        return "fault";
    case RunOutcome::Kind::BudgetExceeded:
        return "budget";
    }
    return "";
}

ExperimentRow analyzer_row(const Dictionary& dict, const Budgets& budgets,
                           const std::string& analyzer_name, const std::string& program,
                           const std::string& input, const std::string& expected) {
    ExperimentRow row{analyzer_name, program, input, expected, "", false};
    try {
        AnalysisResult result;
        if (analyzer_name == unlimited_analyzer_name) {
            result = analyze_unlimited(dict, program, input, budgets);
        } else {
            const Analyzer a{analyzer_name, AnalyzerMode::Limited, Dialect::Plain};
            result = analyze(a, dict, program, input, budgets);
        }
        row.actual = to_string(result.verdict);
    } catch (const BudgetError&) {
        row.actual = "budget";
    } catch (const Error& e) {
        row.actual = std::string("error: ") + e.what();
    }
    row.pass = row.actual == row.expected;
    return row;
}

ExperimentRow run_row(const Dictionary& dict, const Budgets& budgets, const std::string& program,
                      const std::string& input, const std::string& expected) {
    ExperimentRow row{"run", program, input, expected, "", false};
    try {
        row.actual = outcome_class(run(dict, program, input, budgets).kind);
    } catch (const Error& e) {
        row.actual = std::string("error: ") + e.what();
    }
    row.pass = row.actual == row.expected;
    return row;
}

} // namespace

ExperimentReport run_verdict_table(const Dictionary& dict, const Budgets& budgets) {
    const std::string u(unlimited_analyzer_name);
    ExperimentReport report;
    report.rows = {
        analyzer_row(dict, budgets, "halts1", "diag1", "diag1", "maybe"),
        analyzer_row(dict, budgets, "halts2", "diag1", "diag1", "yes"),
        analyzer_row(dict, budgets, "halts2", "diag2", "diag2", "maybe"),
        analyzer_row(dict, budgets, "halts1", "diag2", "diag2", "yes"),
        analyzer_row(dict, budgets, "halts1", "both", "both", "maybe"),
        analyzer_row(dict, budgets, "halts2", "both", "both", "maybe"),
        analyzer_row(dict, budgets, u, "loop", "x", "no"),
        analyzer_row(dict, budgets, u, "stop", "x", "yes"),
        analyzer_row(dict, budgets, u, "dtower", "dtower", "no"),
        run_row(dict, budgets, "dtower", "dtower", "budget"),
    };
    for (const ExperimentRow& row : report.rows)
        (row.pass ? report.passed : report.failed) += 1;
    return report;
}

std::string report_to_text(const ExperimentReport& report) {
    std::ostringstream out;
    for (const ExperimentRow& row : report.rows) {
        out << row.analyzer << " ('" << row.program << "', '" << row.input << "') = ";
        // Verdicts are language-level strings and quoted as such; interpreter
        // outcome classes are not.
        if (row.analyzer == "run")
            out << row.expected;
        else
            out << '\'' << row.expected << '\'';
        if (row.pass)
            out << "  [pass]";
        else
            out << "  [FAIL: got " << row.actual << "]";
        out << '\n';
    }
    out << "rows passed: " << report.passed << " of " << report.rows.size() << '\n';
    return out.str();
}

} // namespace haltkit
