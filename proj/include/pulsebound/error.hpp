#pragma once

#include <stdexcept>
#include <string>

namespace pulsebound {

/// Raised when an input violates the precondition of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

}  // namespace pulsebound
