#pragma once

namespace haltkit {

// Resource limits. Three of them are abort caps — "counter exceeds cap =>
// abort the whole run" — so raising them never changes anything a completed
// run did: it completes identically under any larger caps. max_string_len is
// different in kind: it is part of the machine's definition, and exceeding it
// is a fault, an ordinary abnormal termination that analyses may observe and
// report as such. Verdicts are relative to that machine; scaling it would
// change the language, not the patience.
struct Budgets {
    long long max_steps = 100000;      // abort cap: statements, across nesting
    int max_stack_depth = 1000;        // abort cap: call frames in one simulation
    long long max_string_len = 10000;  // machine bound: longest string value
    int max_analysis_depth = 64;       // abort cap: analyses in flight at once

    // Scales the abort caps, leaving the machine itself alone.
    Budgets scaled(int factor) const {
        Budgets b = *this;
        b.max_steps *= factor;
        b.max_stack_depth *= factor;
        b.max_analysis_depth *= factor;
        return b;
    }
};

} // namespace haltkit
