#pragma once

#include <string>
#include <vector>

#include "haltkit/budgets.hpp"
#include "haltkit/dictionary.hpp"

namespace haltkit {

// One checked claim. `actual` is a verdict string for analyzer rows and an
// outcome class ("halted" / "fault" / "budget") for the interpreter row;
// failures and lookup errors land in `actual` so a damaged corpus yields
// failed rows, not a crashed experiment.
struct ExperimentRow {
    std::string analyzer; // "halts1", "halts2", "halts_", or "run"
    std::string program;
    std::string input;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct ExperimentReport {
    std::vector<ExperimentRow> rows;
    int passed = 0;
    int failed = 0;

    bool all_passed() const { return failed == 0; }
};

// Re-checks the bundled verdict table against the loaded corpus:
//
//   halts1 ('diag1', 'diag1') = 'maybe'     halts2 ('diag1', 'diag1') = 'yes'
//   halts2 ('diag2', 'diag2') = 'maybe'     halts1 ('diag2', 'diag2') = 'yes'
//   halts1 ('both',  'both')  = 'maybe'     halts2 ('both',  'both')  = 'maybe'
//
// plus the unlimited rows (loop/stop/dtower) and the interpreter row showing
// run(dtower, 'dtower') exhausting its budgets. Row order is fixed; rerunning
// on the same corpus gives identical output.
ExperimentReport run_verdict_table(const Dictionary& dict, const Budgets& budgets);

std::string report_to_text(const ExperimentReport& report);

} // namespace haltkit
