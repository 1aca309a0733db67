#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jtdfe {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact division by tau requested on an element with odd rational part.
class NotDivisible : public Error {
public:
    using Error::Error;
};

/// An unsigned tau-adic expansion exceeded its step cap or revisited a state.
class NonTerminating : public Error {
public:
    using Error::Error;
};

/// Scalar outside the accepted interval.
class OutOfRange : public Error {
public:
    using Error::Error;
};

/// Greedy expansion found no in-bounds term that lowers the remainder norm.
class NoProgress : public Error {
public:
    using Error::Error;
};

/// Expansion uses a (tau - 1) exponent above the configured bound.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

/// Lookup-table search produced no representation (a defect if ever raised).
class Infeasible : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Configuration that violates a documented constraint.
class InvalidConfig : public Error {
public:
    using Error::Error;
};

/// Malformed text input. `line()` is 1-based; 0 means "not line specific".
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace jtdfe
