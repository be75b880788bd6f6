#pragma once

#include <string>
#include <vector>

namespace haltkit {

// Flat event log of one simulation (including any nested analyses it
// triggers). check_proof replays these events instead of trusting the
// decider's private state, so a divergence claim can be validated after the
// fact.
enum class TraceEventType {
    SimBegin,        // a simulation of proc(arg) starts
    SimEnd,          // ... and ends (detail: halted/fault/repeat/abandoned)
    FramePush,       // call frame (proc, arg) pushed
    FramePop,        // topmost frame returned
    CallRepeat,      // a Call matched a pending frame (proc, arg) at depth
    AnalysisPush,    // analysis (analyzer, fingerprint, input) began
    AnalysisPop,     // ... and returned
    AnalysisRegress, // a request repeated a live analysis entry
    Print,           // transcript line appended
};

struct TraceEvent {
    TraceEventType type{};
    std::string proc;        // FramePush/FramePop/CallRepeat/SimBegin
    std::string arg;         // dito
    std::string analyzer;    // Analysis* events
    std::string fingerprint; // dito
    std::string input;       // dito
    std::string detail;      // SimEnd outcome, Print value
    long long depth = -1;    // CallRepeat: index of the matching frame
};

struct Trace {
    std::vector<TraceEvent> events;

    void emit(TraceEvent e) { events.push_back(std::move(e)); }
};

const char* to_string(TraceEventType t);

} // namespace haltkit
