#pragma once

#include <stdexcept>
#include <string>

namespace arthro {

// Error taxonomy maps 1:1 onto CLI exit codes:
//   ValidationError -> 2, NumericError -> 3, ComparisonError -> 4.

// Bad input: config values out of range, unknown keys, malformed files,
// inconsistent geometry supplied by the user.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Solver failure: no bracket, no equilibrium in the feasible domain,
// non-finite objective, infeasible triangle reached mid-sweep.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Model-vs-experiment comparison exceeded tolerance.
class ComparisonError : public std::runtime_error {
 public:
  explicit ComparisonError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace arthro
