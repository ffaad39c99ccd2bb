#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wallfact {

enum class ErrorCode {
  ZeroElement,
  UnorderedField,
  EmptyInterval,
  InvalidField,
  FieldMismatch,
  DimensionMismatch,
  NonSquare,
  SingularMatrix,
  TooLarge,
  DegenerateForm,
  SingularVector,
  NotIsometry,
  NotSubspace,
  DegenerateChi,
  ChiQMismatch,
  DegenerateRestriction,
  AlternatingForm,
  NoPositiveVector,
  SymmetricChi,
  NegativeDeterminant,
  NegativeSpinor,
  NegativeDefiniteSpace,
  NotPositive,
  NotLorentz,
  NotMinimal,
  RequiresPrimeField,
  ParseError,
  InternalError,
};

/// Stable machine-readable name, used in JSON error payloads.
std::string_view error_code_name(ErrorCode code);

/// True for errors caused by malformed input rather than by the mathematics
/// of otherwise well-formed input.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace wallfact
