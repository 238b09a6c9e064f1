#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperchar {

/// Thrown when an argument violates an operation's precondition
/// (non-prime modulus, order not dividing p - 1, bound too small, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a route's hypotheses do not cover the requested (p, n).
class InapplicableRoute : public DomainError {
public:
    using DomainError::DomainError;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, std::size_t line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
          source_(std::move(source)),
          line_(line) {}

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string source_;
    std::size_t line_;
};

}  // namespace hyperchar
