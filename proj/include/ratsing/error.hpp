#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratsing {

// Every error thrown by the library derives from Error so callers can catch
// the whole family in one place; the CLI maps the subclasses to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Cycle length does not match the graph, or two cycles disagree in length.
class DimensionError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its documented domain (negative
// coefficients where positivity is required, non-anti-nef input, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A mathematical identity that must hold on valid input failed. Seeing one of
// these means the input graph is outside the supported class (typically not
// rational) or there is a bug.
class InvariantError : public Error {
public:
    using Error::Error;
};

// Parameters out of range: ADE indices, continued fraction arguments, bounds.
class DomainError : public Error {
public:
    using Error::Error;
};

// A graph is structurally unusable (self-loop, duplicate edge, disconnected
// support, not rational where rationality is required).
class GraphError : public Error {
public:
    using Error::Error;
};

// Input is outside the hypotheses of the criterion being applied.
class UnsupportedInputError : public Error {
public:
    using Error::Error;
};

// A chain search exceeded its depth cap.
class TruncationError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace ratsing
