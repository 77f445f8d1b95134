#pragma once

#include <stdexcept>
#include <string>

namespace fibrekit {

enum class ErrorKind {
  InvalidInput,        // malformed or semantically invalid input
  RingMismatch,        // operands live in different rings
  NotHilbert,          // an infinite colength where a finite one is required
  NotYetPolynomial,    // fitting window too short; raise n_max
  NotAReduction,       // J is not a reduction within the search bound
  Precondition,        // an operation's precondition does not hold
  Undetermined,        // an infinite sum did not visibly terminate
  TheoremViolation,    // a proven identity failed: always an implementation bug
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fibrekit
