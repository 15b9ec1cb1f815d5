#pragma once

// Symbolic identity suite. Every asserted identity expands some combination
// of the construction's closed forms over MultiPoly and checks that the
// result is the zero polynomial. Informational entries evaluate the
// hand-listed starting points for the two quartics; they are reported and
// never asserted.

#include <string>
#include <vector>

namespace biquad {

struct IdentityResult {
  std::string name;
  bool passed = false;
  int degree = -1;  // total degree of the larger side before cancellation
  std::string detail;
  /// "<name>: <detail>: PASS|FAIL"
  std::string line() const;
};

struct InformationalResult {
  std::string name;
  std::string curve;     // "Q1" or "Q2"
  std::string pqr;       // e.g. "(3,2,1)"
  std::string t;
  std::string value;     // f(t)
  std::string claimed_y;
  bool value_is_square = false;
  bool matches_claim = false;
};

struct IdentityReport {
  std::vector<IdentityResult> identities;
  std::vector<InformationalResult> informational;
  bool all_passed() const;
};

IdentityReport run_identity_suite();

}  // namespace biquad
