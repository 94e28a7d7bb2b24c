#include "repstab/error.hpp"

namespace repstab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_field: return "InvalidField";
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::bad_input: return "BadInput";
    case ErrorCode::shape_mismatch: return "ShapeMismatch";
    case ErrorCode::index_mismatch: return "IndexMismatch";
    case ErrorCode::field_mismatch: return "FieldMismatch";
    case ErrorCode::algebra_mismatch: return "AlgebraMismatch";
    case ErrorCode::invalid_presentation: return "InvalidPresentation";
    case ErrorCode::relation_violated: return "RelationViolated";
    case ErrorCode::not_a_morphism: return "NotAMorphism";
    case ErrorCode::not_a_subrep: return "NotASubrep";
    case ErrorCode::negative_class: return "NegativeClass";
    case ErrorCode::negative_gamma: return "NegativeGamma";
    case ErrorCode::degenerate_gamma: return "DegenerateGamma";
    case ErrorCode::zero_gamma_length: return "ZeroGammaLength";
    case ErrorCode::not_prime_field: return "NotPrimeField";
    case ErrorCode::zero_norm: return "ZeroNorm";
    case ErrorCode::not_diagonal: return "NotDiagonal";
    case ErrorCode::internal_error: return "InternalError";
    case ErrorCode::search_budget_exceeded: return "SearchBudgetExceeded";
    case ErrorCode::iso_budget_exceeded: return "IsoTestBudgetExceeded";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "UnknownError";
}

BudgetError::BudgetError(ErrorCode code, const std::string& message,
                         std::uint64_t required, std::uint64_t allowed)
    : Error(code, message + " (required " + std::to_string(required) +
                      ", budget " + std::to_string(allowed) + ")"),
      required_(required),
      allowed_(allowed) {}

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(ErrorCode::parse_error, "line " + std::to_string(line) + ", col " +
                                        std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace repstab
