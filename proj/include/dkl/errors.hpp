#pragma once

#include <stdexcept>
#include <string>

namespace dkl {

// Malformed caller input: out-of-range ids, wrong sizes, bad files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exact search exceeded its work budget. Never a verdict.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejection sampling gave up.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Verification parameters outside the oracle-tractable tier.
class TierError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dkl
