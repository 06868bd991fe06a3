#pragma once

#include <stdexcept>
#include <string>

namespace rigid {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad tables, dimension mismatch, bad JSON).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A requested feature is outside what the library supports.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Matrix logarithm requested for a matrix with spectrum on the closed negative axis.
class BranchCutError : public Error {
 public:
  using Error::Error;
};

/// A numerical invariant (cocycle condition, action law, ...) failed its tolerance.
class InvariantViolation : public Error {
 public:
  InvariantViolation(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Input cochain is not a cocycle within tolerance.
class NotACocycle : public InvariantViolation {
 public:
  explicit NotACocycle(double residual) : InvariantViolation("not a cocycle", residual) {}
};

/// An iterative procedure failed. `stage` names the failing step.
class NoConvergence : public Error {
 public:
  NoConvergence(std::string stage, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

/// Inputs lie outside the neighborhood where the local construction applies.
/// This never certifies that the inputs are inequivalent.
class OutOfNeighborhood : public NoConvergence {
 public:
  using NoConvergence::NoConvergence;
};

}  // namespace rigid
