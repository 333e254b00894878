#ifndef KOOPMAN_ERRORS_HPP
#define KOOPMAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace koopman {

enum class ErrorKind {
  Parse,                    // malformed input text / JSON
  Arithmetic,               // division by zero and friends
  Domain,                   // incompatible radicands, non-rational result, ...
  Precondition,             // operation called outside its contract
  DegenerateParameter,      // a formula denominator vanishes
  NotInFamily,              // ODE outside L and X
  Pole,                     // eigenfunction denominator vanishes at a point
  InversionSingularity,     // state-inversion denominator vanishes
  DependentEigenfunctions,  // the two eigenfunctions span one direction
  NotQuadratic,             // reconstruction does not yield a quadratic ODE
  Verification,             // a residual check failed
  Internal,                 // consistency assertion violated
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

} // namespace koopman

#endif
