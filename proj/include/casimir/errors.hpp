#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A series or iterative solver did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// The balance equation has no root for the requested temperature ratio.
class NoSolutionError : public std::runtime_error {
 public:
  explicit NoSolutionError(const std::string& what) : std::runtime_error(what) {}
};

/// dG/da at a root is below numerical resolution, so stability is undecidable.
class DegenerateError : public std::runtime_error {
 public:
  explicit DegenerateError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace casimir
