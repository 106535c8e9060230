#pragma once

#include <stdexcept>
#include <string>

namespace wbcast {

// Malformed input: bad labels, wrong register, unnormalized parameters.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A machine measurement branch whose probability is numerically zero.
class ImpossibleBranch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed object failed one of its own invariants (Hermiticity, trace, PSD...).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wbcast
