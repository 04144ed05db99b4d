#pragma once

#include <stdexcept>
#include <string>

namespace shlat {

// Malformed LatticeSpec strings, unreadable files, malformed JSON documents.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A closed-set or open-set family failed the topology axioms. Raised by the
// builders; for V(I)-derived families it means an implementation bug.
class AxiomViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ClaimActuallyPasses : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace shlat
