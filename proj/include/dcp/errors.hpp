#pragma once

#include <stdexcept>
#include <string>

namespace dcp {

/// Caller broke a documented precondition (bad vertex, too few pebbles, wrong diameter...).
class PreconditionError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed graph6, edge-list, configuration or certificate text.
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Input graph is not connected. Kept separate from ParseError because the
/// text was well formed; the graph is simply outside what the engine accepts.
class DisconnectedGraphError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// An illegal pebbling move was requested.
class IllegalMoveError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A constructive solver broke one of its own bookkeeping invariants. This is
/// always an implementation bug and is never caught internally.
class InvariantViolation : public std::logic_error
{
public:
    InvariantViolation(int condition, const std::string & what) :
        std::logic_error(what),
        _condition(condition)
    {
    }

    /// Numbered condition that failed (1-8 for the diameter-d solver), 0 otherwise.
    [[nodiscard]] auto condition() const noexcept -> int { return _condition; }

private:
    int _condition;
};

/// The exhaustive search hit its stored-state cap before reaching an answer.
class BudgetExceededError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

}
