#ifndef FLAGCHAR_ERROR_HPP
#define FLAGCHAR_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flagchar {

// Every failure the library can raise, so callers (and the CLI) can map
// outcomes to exit codes without string matching.
enum class Errc {
  invalid_argument,
  not_prime,
  reducible_modulus,
  unsupported_size,
  division_by_zero,
  field_mismatch,
  prime_mismatch,
  too_large,
  not_closed,
  not_nested,
  not_row_standard,
  not_negative_root,
  not_main,
  does_not_fit,
  dimension_mismatch,
  hypothesis_violated,
  position_not_in_k,
  context_not_full,
  verge_count_violation,
  context_mismatch,
  non_integral_sum,
  not_two_part,
  not_verge,
  singular,
  check_failed,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::not_prime: return "NotPrime";
    case Errc::reducible_modulus: return "ReducibleModulus";
    case Errc::unsupported_size: return "UnsupportedSize";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::prime_mismatch: return "PrimeMismatch";
    case Errc::too_large: return "TooLarge";
    case Errc::not_closed: return "NotClosed";
    case Errc::not_nested: return "NotNested";
    case Errc::not_row_standard: return "NotRowStandard";
    case Errc::not_negative_root: return "NotNegativeRoot";
    case Errc::not_main: return "NotMain";
    case Errc::does_not_fit: return "DoesNotFit";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::position_not_in_k: return "PositionNotInK";
    case Errc::context_not_full: return "ContextNotFull";
    case Errc::verge_count_violation: return "VergeCountViolation";
    case Errc::context_mismatch: return "ContextMismatch";
    case Errc::non_integral_sum: return "NonIntegralSum";
    case Errc::not_two_part: return "NotTwoPart";
    case Errc::not_verge: return "NotVerge";
    case Errc::singular: return "Singular";
    case Errc::check_failed: return "CheckFailed";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

// Enumeration guard. `need` is the exact cardinality about to be materialized.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 20;

inline void check_budget(std::uint64_t need, std::uint64_t budget, const char* what) {
  if (need > budget)
    fail(Errc::too_large, std::string(what) + " needs " + std::to_string(need) +
                              " elements, budget is " + std::to_string(budget));
}

}  // namespace flagchar

#endif
