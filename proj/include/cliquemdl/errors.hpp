#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliquemdl {

// Malformed edge-list input. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A node index (or count) outside the valid range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A structural precondition failed, e.g. a subset that is not a clique.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Refusal to run an exhaustive routine on an input that is too large.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inconsistent configuration, e.g. a G(n,m) completion without an m code.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cliquemdl
