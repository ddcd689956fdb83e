#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace germlab {

// Base class for every error raised by the library. The CLI maps the
// subclasses onto exit codes; nothing in the library aborts the process.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input. Carries a 1-based source position.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column), message_(message) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

// A mathematical precondition or hypothesis does not hold for the input
// (arity mismatch, non-finite germ, positive-dimensional fiber, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A configured resource guard (degree, basis size) was exceeded, or the
// computation was cancelled by the caller.
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace germlab
