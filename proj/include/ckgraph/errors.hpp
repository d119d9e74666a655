#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ckgraph {

/// Malformed graph input. `line` is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line == 0 ? what : what + ", line " + std::to_string(line)),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Input outside an operation's domain (disconnected graph, wrong genus, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two independent computations of a proven quantity disagreed.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ckgraph
