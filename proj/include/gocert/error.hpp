#pragma once

#include <stdexcept>
#include <string>

namespace gocert {

/// Raised when an input violates the invariants of a domain type, or an
/// operation is asked for a value that is undefined on its input.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace gocert
