#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domination {

// User input that cannot be accepted (syntax, out-of-range invariants,
// unsupported Seifert data). The CLI maps these to exit code 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// A Seifert piece that normalization refuses to rewrite.
class NormalizationError : public InputError {
 public:
  using InputError::InputError;
};

// Presentability by products is only defined for infinite groups.
class FiniteGroupError : public InputError {
 public:
  using InputError::InputError;
};

// Raised when the brute-force coset enumeration would exceed its bound.
class OracleBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic that must hold by construction did not. Signals a bug, not bad
// input; the CLI maps these to exit code 2.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace domination
