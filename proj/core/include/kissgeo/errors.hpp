#pragma once

#include <stdexcept>
#include <string>

namespace kissgeo {

/// Raised when a numerical routine cannot meet its accuracy contract
/// (eigensolver non-convergence, a singular pivot block, a factorization
/// whose residual exceeds tolerance).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Input violates a documented precondition of an operation.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace kissgeo
