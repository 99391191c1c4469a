#pragma once

#include <stdexcept>
#include <string>

namespace qsphere {

/// Raised when an input violates a named mathematical side condition
/// (for example "A2 does not divide f_{n-q}"). The condition name is kept
/// separately so callers can report it verbatim.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string condition, const std::string& detail)
      : std::invalid_argument(condition + ": " + detail),
        condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

/// Operands of a polynomial operation live in different variable sets.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed polynomial text or JSON.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qsphere
