#pragma once

#include <stdexcept>
#include <string>

namespace dslab {

enum class ErrorKind {
  DimensionMismatch,
  DuplicateLabel,
  WeightArityMismatch,
  NotDiagonal,
  InvalidParams,
  NotAnIdeal,
  NotOdd,
  NotHomogeneous,
  IrrationalSpectrum,
  RankOutOfRange,
  AlgebraMismatch,
  NotSemisimpleAction,
  GradingViolation,
  RepresentativeInconsistency,
  NotASubmodule,
  NotInBracketImage,
  QuotientFailure,
  NotStandardForm,
  NotToral,
  ImageMismatch,
  NotSplit,
  NotDominant,
  SchemaViolation,
  NotGraded,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` carries the typed error.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dslab
