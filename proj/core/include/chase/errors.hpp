#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chase {

/// Raised when an argument violates an operation's precondition (index out
/// of range, mismatched sizes, unnormalized distribution, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text-format parse failure; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A protocol run broke its schedule.
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Reduction parameters violate t^{2p} r^{p-1} <= n/10, or t rounds to 0.
class InfeasibleParams : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace chase
