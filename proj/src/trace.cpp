#include "haltkit/trace.hpp"

namespace haltkit {

const char* to_string(TraceEventType type) {
    switch (type) {
    case TraceEventType::SimBegin:
        return "sim-begin";
    case TraceEventType::SimEnd:
        return "sim-end";
    case TraceEventType::FramePush:
        return "frame-push";
    case TraceEventType::FramePop:
        return "frame-pop";
    case TraceEventType::CallRepeat:
        return "call-repeat";
    case TraceEventType::AnalysisPush:
        return "analysis-push";
    case TraceEventType::AnalysisPop:
        return "analysis-pop";
    case TraceEventType::AnalysisRegress:
        return "analysis-regress";
    case TraceEventType::Print:
        return "print";
    }
    return "";
}

} // namespace haltkit
