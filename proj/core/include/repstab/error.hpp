#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace repstab {

// Error taxonomy.  Codes are stable; the command line tool maps them onto
// exit codes (parse errors -> 2, exhausted search budgets -> 3, every other
// domain error -> 1).
enum class ErrorCode {
  invalid_field,         // characteristic is not prime / out of range
  division_by_zero,      // scalar inverse of zero requested
  bad_input,             // malformed argument outside the other categories
  shape_mismatch,        // matrix dimensions incompatible
  index_mismatch,        // class/vector length disagrees with vertex count
  field_mismatch,        // operands live over different fields
  algebra_mismatch,      // operands live over different algebra presentations
  invalid_presentation,  // quiver presentation rejected at validation
  relation_violated,     // arrow maps fail a defining relation
  not_a_morphism,        // vertex maps fail the intertwining equations
  not_a_subrep,          // bases dependent or not closed under arrows
  negative_class,        // a class required to be effective has negative entry
  negative_gamma,        // gamma has a negative coefficient
  degenerate_gamma,      // gamma vanishes somewhere on the support of alpha
  zero_gamma_length,     // slope requested for an object of gamma-length zero
  not_prime_field,       // an exhaustive search was requested over Q
  zero_norm,             // mu requested for a filtration with zero norm
  not_diagonal,          // projective/simple pairing matrix not diagonal
  internal_error,        // a certified invariant failed; indicates a bug
  search_budget_exceeded,
  iso_budget_exceeded,
  parse_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// A search space turned out larger than its budget; carries the required
// size (saturated at 2^64-1 when it overflows) so callers can report it.
class BudgetError : public Error {
 public:
  BudgetError(ErrorCode code, const std::string& message,
              std::uint64_t required, std::uint64_t allowed);

  std::uint64_t required() const { return required_; }
  std::uint64_t allowed() const { return allowed_; }

 private:
  std::uint64_t required_;
  std::uint64_t allowed_;
};

// Text input rejected; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace repstab
