// errors.hpp -- exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace posmc {

/// Base class of everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shape or index-label disagreement between matrix/vector operands.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A structure violates a construction rule (row/initial suprema, value
/// ranges, unknown references). Nothing is ever repaired silently.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A state name or index does not belong to the structure.
class UnknownStateError : public Error {
public:
    using Error::Error;
};

/// A state sequence is not a path: some step has possibility 0.
class NotAPathError : public Error {
public:
    using Error::Error;
};

/// Automaton misuse: wrong kind for the operation, incomplete transition
/// function where completeness is required, or an alphabet mismatch.
class AutomatonError : public Error {
public:
    using Error::Error;
};

/// Syntax or semantic error in a model/automaton document. Line and column
/// are 1-based and refer to the offending token.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace posmc
