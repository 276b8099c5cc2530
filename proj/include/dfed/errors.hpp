#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dfed {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownVertexError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold
/// (edge not in graph, unsupported family, bad parameter).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A structural property that the algorithms rely on was found broken.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// A brute-force enumeration would exceed its configured cap.
class GuardError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace dfed
