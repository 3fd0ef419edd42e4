#pragma once

#include <stdexcept>
#include <string>

namespace pyrito {

// Raised for inputs outside an operation's domain: division by zero,
// non-unit quaternions, degenerate hull input, unknown names.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed literal text (FieldScalar or coordinate lists).
class ParseError : public DomainError {
 public:
  explicit ParseError(const std::string& what) : DomainError(what) {}
};

}  // namespace pyrito
