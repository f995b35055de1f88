#pragma once

#include <stdexcept>
#include <string>

namespace fractops {

/// Broad failure classes; the numeric values double as CLI exit codes.
enum class ErrorKind : int {
  Usage = 1,
  Numerical = 2,
  Io = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

class SingularMapError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonContractiveError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class GridMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class EmptyMaskError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, int required_depth)
      : Error(ErrorKind::Numerical, what), required_depth_(required_depth) {}
  /// Depth at which the render would converge to pixel resolution.
  int required_depth() const noexcept { return required_depth_; }

 private:
  int required_depth_;
};

class OffAttractorError : public Error {
 public:
  explicit OffAttractorError(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

class BranchExplosionError : public Error {
 public:
  explicit BranchExplosionError(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

}  // namespace fractops
