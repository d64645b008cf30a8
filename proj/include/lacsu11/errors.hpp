#pragma once

#include <stdexcept>
#include <string>

namespace lacsu11 {

/// Bad user input: malformed values, broken invariants, unusable grids.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Request exceeds a hard budget (window too large, enumeration too big).
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Quadrature grid too coarse for the polynomial at hand.
struct GridError : ValidationError {
  explicit GridError(const std::string& what) : ValidationError(what) {}
};

}  // namespace lacsu11
