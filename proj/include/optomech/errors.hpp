#pragma once

#include <stdexcept>
#include <string>

namespace optomech {

// Configuration / validation problems. CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Domain failures (non-convergence, instability, singular operators).
// CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonConvergence : DomainError {
  NonConvergence(const std::string& msg, double last_residual_)
      : DomainError(msg), last_residual(last_residual_) {}
  double last_residual;
};

struct DegenerateDenominator : DomainError {
  using DomainError::DomainError;
};

struct UnstableSystem : DomainError {
  UnstableSystem(const std::string& msg, double max_real_part_)
      : DomainError(msg), max_real_part(max_real_part_) {}
  double max_real_part;
};

struct SingularLyapunov : DomainError {
  using DomainError::DomainError;
};

struct SingularResolvent : DomainError {
  SingularResolvent(const std::string& msg, double omega_)
      : DomainError(msg), omega(omega_) {}
  double omega;
};

struct EigenSolverFailure : DomainError {
  using DomainError::DomainError;
};

}  // namespace optomech
