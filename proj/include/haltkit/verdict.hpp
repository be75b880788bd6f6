#pragma once

#include <string_view>

namespace haltkit {

// The entire verdict vocabulary. Resource exhaustion is not a verdict; it is
// reported separately (BudgetError / RunOutcome) and never folded into one.
enum class Verdict { Yes, No, Maybe, NotApplicable };

constexpr std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Yes:
        return "yes";
    case Verdict::No:
        return "no";
    case Verdict::Maybe:
        return "maybe";
    case Verdict::NotApplicable:
        return "not applicable";
    }
    return "";
}

} // namespace haltkit
