#pragma once

#include <stdexcept>
#include <string>

namespace sepkit {

// Malformed input: unknown labels, bad files, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed its configured cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed (an identity, a cross-check, an
// assertion on a computed invariant).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A matrix with entries in {-1,0,1} turned out not to be totally unimodular.
class NotTotallyUnimodular : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised by the checked 64-bit scalar; callers retry with big integers.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace sepkit
