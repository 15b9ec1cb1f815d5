#pragma once

// Rational points on y^2 = f(t) for monic quartics f: the two curves coming
// from x1*x3 and x2*x3, point verification, and the chord (two known points)
// and tangent (one known point) constructions of new points.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biquad/exact.hpp"

namespace biquad {

/// y^2 = t^4 + c3 t^3 + c2 t^2 + c1 t + c0.
struct MonicQuartic {
  Rational c3, c2, c1, c0;

  Rational eval(const Rational& t) const;
  /// f'(t)
  Rational derivative(const Rational& t) const;
  friend bool operator==(const MonicQuartic&, const MonicQuartic&) = default;
};

/// A point with y^2 = f(t); y >= 0 by convention.
struct CurvePoint {
  Rational t;
  Rational y;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// (Q1, Q2): the products x1*x3 and x2*x3 of the scaled solution divided by
/// their common t^4 coefficient D^2. Throws DomainError for zero p, q, r and
/// DegenerateError when D = p^4 - r^4 = 0.
std::pair<MonicQuartic, MonicQuartic> build_quartics(const BigInt& p, const BigInt& q, const BigInt& r);

inline Rational eval_quartic(const MonicQuartic& f, const Rational& t) { return f.eval(t); }

/// The point (t, sqrt(f(t))) when f(t) is the square of a rational.
std::optional<CurvePoint> verify_square_point(const MonicQuartic& f, const Rational& t);

enum class Sign { plus, minus };

inline Rational apply(Sign s, const Rational& v) { return s == Sign::plus ? v : -v; }
inline char symbol(Sign s) { return s == Sign::plus ? '+' : '-'; }

enum class ConstructionStatus {
  new_point,     // f - g^2 had a residual rational root
  no_new_point,  // f - g^2 has no root beyond the known ones
  degenerate,    // f - g^2 vanishes identically (f = g^2)
};

const char* to_string(ConstructionStatus s);

/// Outcome of one sign variant of a chord or tangent construction. g is the
/// fitted monic quadratic t^2 + g1 t + g0.
struct ConstructionOutcome {
  std::vector<Sign> signs;
  Rational g1, g0;
  ConstructionStatus status = ConstructionStatus::no_new_point;
  std::optional<CurvePoint> point;
};

/// Fits g with g(t1) = s1*y1 and g(t2) = s2*y2 and returns the residual root
/// of f - g^2. Throws DomainError when t1 = t2 or a point is off the curve.
ConstructionOutcome secant_new_point(const MonicQuartic& f, const CurvePoint& p1, const CurvePoint& p2, Sign s1,
                                     Sign s2);

/// All four sign variants, in the order (+,+), (+,-), (-,+), (-,-).
std::vector<ConstructionOutcome> secant_variants(const MonicQuartic& f, const CurvePoint& p1, const CurvePoint& p2);

/// Fits g with g(t1) = s*y1 and 2 s y1 g'(t1) = f'(t1), so f - g^2 has a
/// double root at t1, and returns its residual root. Throws DegenerateError
/// when y1 = 0 and DomainError when the point is off the curve.
ConstructionOutcome tangent_new_point(const MonicQuartic& f, const CurvePoint& p, Sign s);

/// Both sign variants, (+) then (-).
std::vector<ConstructionOutcome> tangent_variants(const MonicQuartic& f, const CurvePoint& p);

}  // namespace biquad
