#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace haltkit {

// Half-open byte range into a source text.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;

    friend bool operator==(const Span&, const Span&) = default;
};

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

class LexError : public Error {
public:
    LexError(const std::string& message, Span at) : Error(message), at(at) {}
    Span at;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, Span at) : Error(message), at(at) {}
    Span at;
};

// Unknown, duplicate, or otherwise colliding names (procedures, analyzers,
// rename targets, corpus files).
class NameError : public Error {
public:
    explicit NameError(const std::string& message) : Error(message) {}
};

// A resource cap was hit. Deliberately not a verdict: callers either surface
// it as BudgetExceeded (runs) or let it propagate as an error (analyses).
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& budget_name)
        : Error("budget exhausted: " + budget_name), budget(budget_name) {}
    std::string budget;
};

} // namespace haltkit
