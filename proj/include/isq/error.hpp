#pragma once

#include <stdexcept>
#include <string>

namespace isq {

enum class ErrorKind {
  // special functions
  PoleAtNonPositiveInteger,
  OnCut,
  OrderAtNegativeIntegerSingularity,
  NonPositiveArgument,
  MultiplierPole,
  // toy model
  MzeroUseLogFamily,
  AtEigenvalue,
  LambdaPole,
  // homogeneous operators
  DomainViolation,
  OutsideClassifiedRegion,
  QuadratureNotConverged,
  // transforms
  GridCoverage,
  AsymmetricGrid,
  NonUniformGrid,
  TruncationTooSevere,
  GridTooCoarse,
  NearCut,
  // oracle
  NoConvergence,
  WindowExhausted,
  // cli / config
  Usage,
};

const char* to_string(ErrorKind kind) noexcept;

// Single exception type; the kind drives CLI exit codes and test assertions.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // 2 for usage/domain errors, 4 for numerical non-convergence.
  int exit_code() const noexcept;

 private:
  ErrorKind kind_;
};

}  // namespace isq
