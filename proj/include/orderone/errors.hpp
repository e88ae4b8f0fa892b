#pragma once

#include <stdexcept>
#include <string>

namespace orderone {

// A search or enumeration was asked to go past a hard bound.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument does not hold.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Polynomial or integer division that was required to be exact was not.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An internal cross-check failed (two routes disagree, a product check
// failed, ...). Always indicates a bug or a violated mathematical claim.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace orderone
