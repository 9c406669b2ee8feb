#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hinfsyn {

// Every failure the toolkit raises derives from Error. The category is a
// stable machine-readable token; the CLI prints it verbatim so scripts can
// dispatch on it without parsing prose.
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& message)
      : std::runtime_error(message), category_(std::move(category)) {}

  const std::string& category() const noexcept { return category_; }

 private:
  std::string category_;
};

// Matrix shapes are inconsistent (the message names the offending pair).
struct DimensionError final : Error {
  explicit DimensionError(const std::string& m) : Error("dimension", m) {}
};

// An entry is NaN or infinite (the message names the matrix and index).
struct NonFiniteError final : Error {
  explicit NonFiniteError(const std::string& m) : Error("nonfinite", m) {}
};

// A scalar argument is out of range (nonpositive tolerance, beta <= 0, ...).
struct InvalidArgumentError final : Error {
  explicit InvalidArgumentError(const std::string& m) : Error("invalid-argument", m) {}
};

// A SynthesisConfig field fails validation.
struct ConfigError final : Error {
  explicit ConfigError(const std::string& m) : Error("config", m) {}
};

// A plant violates an assumption synthesis cannot work without
// (stabilizability of (A, B) or detectability of (A, C)).
struct AssumptionError final : Error {
  explicit AssumptionError(const std::string& m) : Error("assumption", m) {}
};

// The Lyapunov operator is singular: some eigenvalue pair of A1 sums to zero.
struct IllPosedEquationError final : Error {
  explicit IllPosedEquationError(const std::string& m) : Error("ill-posed-equation", m) {}
};

// The Riccati equation has no stabilizing solution at the requested level
// (Hamiltonian eigenvalues on the imaginary axis, or an indefinite solution).
struct NoStabilizingSolutionError final : Error {
  explicit NoStabilizingSolutionError(const std::string& m) : Error("no-stabilizing-solution", m) {}
};

// The stable invariant subspace exists but its leading block is numerically
// singular, so the solution cannot be extracted from it.
struct SubspaceExtractionError final : Error {
  explicit SubspaceExtractionError(const std::string& m) : Error("subspace-extraction", m) {}
};

// An operation that requires a Hurwitz closed loop was handed an unstable one.
struct UnstableClosedLoopError final : Error {
  explicit UnstableClosedLoopError(const std::string& m) : Error("unstable-closed-loop", m) {}
};

// The frequency response is requested exactly at a closed-loop pole.
struct PoleAtFrequencyError final : Error {
  explicit PoleAtFrequencyError(const std::string& m) : Error("pole-at-frequency", m) {}
};

// A computed quantity failed its own sanity gate (residual too large, an
// eigensolver reported failure, a factorization broke down).
struct NumericalError final : Error {
  explicit NumericalError(const std::string& m) : Error("numerical", m) {}
};

// Bisection failed to bracket or shrink within its iteration caps. Carries
// the last bracket so callers can report how far it got.
class NonConvergenceError final : public Error {
 public:
  NonConvergenceError(const std::string& m, double lower, double upper)
      : Error("non-convergence", m), lower_(lower), upper_(upper) {}
  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }

 private:
  double lower_;
  double upper_;
};

// The line search ran out of its evaluation budget. Carries the last (s,
// alpha) pair that was about to be tried.
class LineSearchExhaustedError final : public Error {
 public:
  LineSearchExhaustedError(const std::string& m, double step, double alpha)
      : Error("line-search-exhausted", m), step_(step), alpha_(alpha) {}
  double step() const noexcept { return step_; }
  double alpha() const noexcept { return alpha_; }

 private:
  double step_;
  double alpha_;
};

// A system or gain file is malformed (the message names the field).
struct ParseError final : Error {
  explicit ParseError(const std::string& m) : Error("parse", m) {}
};

// A file could not be read or written.
struct IoError final : Error {
  explicit IoError(const std::string& m) : Error("io", m) {}
};

}  // namespace hinfsyn
