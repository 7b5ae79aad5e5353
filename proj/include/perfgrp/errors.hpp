#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace perfgrp {

// Precondition violated by a well-formed request (odd dihedral order,
// non-normal quotient, non-prime modulus, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured size bound would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed group-spec text. `position` is a 0-based character offset.
class SyntaxError : public std::invalid_argument {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Well-formed group-spec text that names an impossible group (D7, C0).
class SemanticError : public DomainError {
 public:
  SemanticError(const std::string& what, std::size_t position)
      : DomainError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace perfgrp
