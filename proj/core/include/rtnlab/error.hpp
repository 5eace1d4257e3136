// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace rtnlab {

/// Bad argument value: dimensions, unnormalized vectors, non-Hermitian input.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// Tensor leg extents that do not line up.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured size cap (amplitudes, enumeration budget) would be exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation outside a function's convergence region.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Normalization factor too small to divide by.
class DegenerateState : public std::runtime_error {
 public:
  explicit DegenerateState(const std::string& what) : std::runtime_error(what) {}
};

/// An internal self-check failed (e.g. a series coefficient that should be an integer is not).
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rtnlab
