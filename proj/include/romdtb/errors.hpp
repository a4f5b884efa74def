#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace romdtb {

// Process exit codes used by the command-line front end.
enum class ExitCode : int {
  kSuccess = 0,
  kValidation = 2,
  kNumerical = 3,
  kIo = 4,
};

/// Base class of every error raised by the library.
///
/// Errors raised inside the Data-to-Born pipeline get tagged with the
/// pipeline step (1..7) that failed; what() includes the tag.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message)
      : std::runtime_error(message), message_(message) {}

  const char* what() const noexcept override { return composed_.empty() ? message_.c_str() : composed_.c_str(); }

  virtual ExitCode exit_code() const noexcept = 0;

  void set_step(int step) {
    step_ = step;
    composed_ = "step " + std::to_string(step) + ": " + message_;
  }
  std::optional<int> step() const noexcept { return step_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::string composed_;
  std::optional<int> step_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::kValidation; }
};

class ShapeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class GeometryError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IoError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::kIo; }
};

/// Numerical breakdowns: these are documented outcomes, not bugs.
class NumericalError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::kNumerical; }
};

/// A Cholesky pivot block is not positive definite.
class BreakdownError : public NumericalError {
 public:
  BreakdownError(const std::string& message, std::size_t block_index)
      : NumericalError(message + " (block " + std::to_string(block_index) + ")"),
        block_index_(block_index) {}
  std::size_t block_index() const noexcept { return block_index_; }

 private:
  std::size_t block_index_;
};

/// A block Lanczos candidate block lost rank.
class DeflationError : public NumericalError {
 public:
  DeflationError(const std::string& message, std::size_t step_index)
      : NumericalError(message + " (lanczos step " + std::to_string(step_index) + ")"),
        step_index_(step_index) {}
  std::size_t step_index() const noexcept { return step_index_; }

 private:
  std::size_t step_index_;
};

class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& message, double residual)
      : NumericalError(message + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class TruncationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The data Gramian is not positive definite, so the unregularized ROM
/// cannot be built.
class IndefiniteGramian : public NumericalError {
 public:
  IndefiniteGramian(const std::string& message, std::size_t block_index)
      : NumericalError(message), block_index_(block_index) {}
  std::size_t block_index() const noexcept { return block_index_; }

 private:
  std::size_t block_index_;
};

class StabilityError : public NumericalError {
 public:
  StabilityError(const std::string& message, int suggested_substeps)
      : NumericalError(message + " (try substeps >= " + std::to_string(suggested_substeps) + ")"),
        suggested_substeps_(suggested_substeps) {}
  int suggested_substeps() const noexcept { return suggested_substeps_; }

 private:
  int suggested_substeps_;
};

}  // namespace romdtb
