#pragma once

#include <stdexcept>
#include <string>

namespace biquad {

/// Input outside an operation's domain (negative radicand, mismatched
/// variable lists, malformed numeric text, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameters that are well-formed but collapse the construction: a vanishing
/// denominator, a zero triad entry, a curve that is a polynomial square.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact check that must hold by construction did not. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace biquad
