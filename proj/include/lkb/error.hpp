#pragma once

#include <stdexcept>
#include <string>

namespace lkb {

/// Malformed textual input (braid words, free words, polynomials, JSON).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands built for different strand counts, or an index outside 1..n.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation that needs the defining loop word of a homology class was
/// handed a class without one.
class MissingProvenance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed certificate failed to re-verify. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lkb
