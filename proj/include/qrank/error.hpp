#pragma once

#include <stdexcept>
#include <string>

namespace qrank {

// Failure categories raised by the engine. Throw sites pick the narrowest
// kind; tests match on the kind, never on message text.
enum class ErrorKind {
  invalid_truncation,      // requested order below the monomial exponent
  non_invertible,          // zero series or zero leading coefficient
  beyond_truncation,       // coefficient requested above the tracked order
  insufficient_precision,  // comparison order exceeds a tracked order
  degenerate_factor,       // inverting a Pochhammer factor with zero constant
  degenerate_term,         // Lambert term with identically-zero denominator
  invalid_parameter,       // precondition violation on plain parameters
  divergent_spec,          // formally divergent theta/series specification
  assembly,                // an assembled series violated a structural invariant
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_truncation: return "invalid-truncation";
    case ErrorKind::non_invertible: return "non-invertible";
    case ErrorKind::beyond_truncation: return "beyond-truncation";
    case ErrorKind::insufficient_precision: return "insufficient-precision";
    case ErrorKind::degenerate_factor: return "degenerate-factor";
    case ErrorKind::degenerate_term: return "degenerate-term";
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::divergent_spec: return "divergent-spec";
    case ErrorKind::assembly: return "assembly";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qrank
