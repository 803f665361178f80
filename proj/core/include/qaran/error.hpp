#pragma once

#include <stdexcept>
#include <string>

namespace qaran {

/// Raised when a model input violates a domain invariant (non-positive
/// bandwidth, losses >= 1, load above link capacity, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qaran
