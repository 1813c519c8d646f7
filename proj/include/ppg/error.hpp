#pragma once

#include <stdexcept>
#include <string>

namespace ppg {

/// Malformed cycle notation or other unparseable input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation's precondition does not hold (degree mismatch, identity
/// vertex, wrong cycle type, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The connectivity hypothesis on n fails and the caller did not force.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive search requested above the configured degree cutoff.
class CutoffError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A synthesized path failed validation or exceeded its declared bound.
/// Always a bug in the synthesizer.
class BoundViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ppg

namespace ppg {

/// None of the available constructions applies to the given pair. With the
/// connectivity hypothesis in force this cannot happen; it is expected only
/// for forced, best-effort synthesis.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ppg
