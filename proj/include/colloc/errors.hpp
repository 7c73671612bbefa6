#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace colloc {

// expression text could not be parsed; offset is the byte position of the failure
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t offset_)
      : std::runtime_error("syntax error at offset " + std::to_string(offset_) + ": " + what),
        offset(offset_) {}
  std::size_t offset;
};

// evaluation hit a point where the expression is not defined (or not differentiable)
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// adaptive quadrature ran out of recursion depth before reaching the requested tolerance
struct QuadratureError : std::runtime_error {
  QuadratureError(const std::string& what, double achieved_)
      : std::runtime_error(what), achieved(achieved_) {}
  double achieved;   // best local error estimate at the failing leaf
};

// Cholesky pivot was non-positive; `pivot` is the offending row
struct NotPositiveDefinite : std::runtime_error {
  explicit NotPositiveDefinite(int pivot_)
      : std::runtime_error("matrix is not positive definite (pivot " + std::to_string(pivot_) + ")"),
        pivot(pivot_) {}
  int pivot;
};

// bad command-line configuration
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace colloc
