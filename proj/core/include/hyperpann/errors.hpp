#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperpann {

/// Argument outside the mathematical domain of an operation (non-positive
/// stretch, zero Ogden exponent, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller broke a precondition that is a programming error (dimension
/// mismatch, wrong architecture kind for an operation).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A model produced a non-finite value where a finite one is required.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. Carries the 1-based line number when known (0 otherwise).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hyperpann
