#ifndef PSIKIT_ERRORS_HPP
#define PSIKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace psikit {

// Typed failure conditions surfaced by the CLI as messages, never stack traces.
enum class ErrorKind {
  invalid_input,          // bad parameters, malformed models, parse errors
  alpha_undefined,        // alpha table missing an occurring multiplicity
  missing_strata,         // operation needs strata (e.g. strata_total) not present
  missing_discrepancy,    // behrend/unit reconstruction without discrepancies
  irrational_singular_point,
  irrational_infinitely_near_point,
  max_iterations,
  non_isolated,
  non_integral_delta,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_input: return "InvalidInput";
    case ErrorKind::alpha_undefined: return "AlphaUndefined";
    case ErrorKind::missing_strata: return "MissingStrata";
    case ErrorKind::missing_discrepancy: return "MissingDiscrepancy";
    case ErrorKind::irrational_singular_point: return "IrrationalSingularPoint";
    case ErrorKind::irrational_infinitely_near_point:
      return "IrrationalInfinitelyNearPoint";
    case ErrorKind::max_iterations: return "MaxIterations";
    case ErrorKind::non_isolated: return "NonIsolated";
    case ErrorKind::non_integral_delta: return "NonIntegralDelta";
  }
  return "Error";
}

}  // namespace psikit

#endif
