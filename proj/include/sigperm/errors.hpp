#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sigperm {

// Precondition failures on otherwise well-typed input (wrong degree, index
// out of range, element outside the function's domain).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A cycle or one-line description that does not describe a signed permutation.
class MalformedNotation : public DomainError {
 public:
  using DomainError::DomainError;
};

// Exhaustive work refused because it exceeds the configured element budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace sigperm
