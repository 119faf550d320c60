#pragma once

#include <stdexcept>
#include <string>

namespace altbest {

/// Raised when class counts or an arrival sequence break the k-class model.
class ModelError : public std::invalid_argument {
 public:
  explicit ModelError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised for arguments outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace altbest
