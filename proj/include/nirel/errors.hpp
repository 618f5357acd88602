#ifndef NIREL_ERRORS_HPP
#define NIREL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nirel {

// Caller passed arguments that violate a precondition (dimension mismatch,
// unknown name, malformed input).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical routine could not produce a result (singular matrix,
// series did not converge).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value failed a group or algebra membership test. `violation` is the
// largest entrywise residual observed.
class MembershipError : public std::runtime_error {
 public:
  MembershipError(const std::string& what, double violation)
      : std::runtime_error(what + " (max violation " + std::to_string(violation) + ")"),
        violation_(violation) {}
  double violation() const noexcept { return violation_; }

 private:
  double violation_;
};

// An internal identity that must hold by construction did not.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A matrix commutator could not be expressed in the generator basis.
class ClosureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A contraction sweep did not decrease monotonically.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lorentz matrix outside the identity component (parity or time reversal).
class UnsupportedComponentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nirel

#endif  // NIREL_ERRORS_HPP
