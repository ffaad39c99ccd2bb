#include "wallfact/error.hpp"

namespace wallfact {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::UnorderedField: return "UnorderedField";
    case ErrorCode::EmptyInterval: return "EmptyInterval";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::SingularVector: return "SingularVector";
    case ErrorCode::NotIsometry: return "NotIsometry";
    case ErrorCode::NotSubspace: return "NotSubspace";
    case ErrorCode::DegenerateChi: return "DegenerateChi";
    case ErrorCode::ChiQMismatch: return "ChiQMismatch";
    case ErrorCode::DegenerateRestriction: return "DegenerateRestriction";
    case ErrorCode::AlternatingForm: return "AlternatingForm";
    case ErrorCode::NoPositiveVector: return "NoPositiveVector";
    case ErrorCode::SymmetricChi: return "SymmetricChi";
    case ErrorCode::NegativeDeterminant: return "NegativeDeterminant";
    case ErrorCode::NegativeSpinor: return "NegativeSpinor";
    case ErrorCode::NegativeDefiniteSpace: return "NegativeDefiniteSpace";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NotLorentz: return "NotLorentz";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::RequiresPrimeField: return "RequiresPrimeField";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidField:
    case ErrorCode::FieldMismatch:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NonSquare:
      return true;
    default:
      return false;
  }
}

}  // namespace wallfact
