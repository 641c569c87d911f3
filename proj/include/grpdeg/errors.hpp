#pragma once

#include <stdexcept>
#include <string>

namespace grpdeg {

/// Thrown when an argument is outside the domain an operation is defined on
/// (odd n for a generalized dicyclic group, m < 3 for a generalized
/// quaternion group, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when a computation would exceed the configured group-order bound.
class BoundExceeded : public std::runtime_error {
public:
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace grpdeg
