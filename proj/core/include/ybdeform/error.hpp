#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ybdeform {

// Base class of every exception thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: out-of-range table entries, size mismatches, bad builder
// parameters, unparsable documents.  Also used for violated preconditions
// that amount to handing the wrong object to an operation.
struct InputError : Error {
  using Error::Error;
};

// A structural axiom failed during verification.  Carries the axiom name and
// the witness tuple that violates it.
class AxiomError : public Error {
 public:
  AxiomError(const std::string& axiom, const std::vector<int>& witness);

  const std::string& axiom() const { return axiom_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::vector<int> witness_;
};

// The value is well formed but lacks the structure the operation needs
// (e.g. inverting in a semigroup that is not inverse).
struct UnsupportedError : Error {
  using Error::Error;
};

// An exhaustive search was refused because it would exceed the configured
// budget.  Deliberately distinct from failure: the answer is unknown.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace ybdeform
