#include "biquad/quartic.hpp"

#include "biquad/errors.hpp"
#include "biquad/family_forms.hpp"

namespace biquad {

namespace {

// Dense univariate polynomial, coefficients in ascending degree.
using UPoly = std::vector<Rational>;

void trim(UPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

UPoly sub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Divides by (t - root); the remainder must vanish.
UPoly deflate(const UPoly& f, const Rational& root) {
  if (f.empty()) return {};
  UPoly quotient(f.size() - 1);
  Rational carry;
  for (std::size_t i = f.size(); i-- > 1;) {
    carry = f[i] + carry * root;
    quotient[i - 1] = carry;
  }
  if (!(f[0] + carry * root).is_zero()) throw ConsistencyError("deflation by a non-root");
  trim(quotient);
  return quotient;
}

UPoly as_upoly(const MonicQuartic& f) { return {f.c0, f.c1, f.c2, f.c3, Rational(1)}; }

Rational eval_monic_quadratic(const Rational& g1, const Rational& g0, const Rational& t) { return (t + g1) * t + g0; }

void require_on_curve(const MonicQuartic& f, const CurvePoint& pt) {
  if (pt.y * pt.y != f.eval(pt.t)) {
    throw DomainError("point (" + pt.t.to_string() + ", " + pt.y.to_string() + ") is not on the curve");
  }
}

// f - g^2 after the known roots have been divided out.
ConstructionOutcome finish(const MonicQuartic& f, std::vector<Sign> signs, Rational g1, Rational g0,
                           const std::vector<Rational>& known_roots) {
  ConstructionOutcome out{std::move(signs), std::move(g1), std::move(g0), ConstructionStatus::no_new_point,
                          std::nullopt};
  const UPoly g{out.g0, out.g1, Rational(1)};
  UPoly residual = sub(as_upoly(f), mul(g, g));
  if (residual.empty()) {
    out.status = ConstructionStatus::degenerate;
    return out;
  }
  if (residual.size() > 4) throw ConsistencyError("f - g^2 kept its quartic term");
  for (const auto& root : known_roots) residual = deflate(residual, root);

  // A nonzero constant left over means the third intersection is at infinity.
  if (residual.size() != 2) return out;
  const Rational t3 = -residual[0] / residual[1];
  CurvePoint pt{t3, abs(eval_monic_quadratic(out.g1, out.g0, t3))};
  if (pt.y * pt.y != f.eval(t3)) throw ConsistencyError("constructed point is off the curve");
  out.status = ConstructionStatus::new_point;
  out.point = std::move(pt);
  return out;
}

}  // namespace

Rational MonicQuartic::eval(const Rational& t) const { return (((t + c3) * t + c2) * t + c1) * t + c0; }

Rational MonicQuartic::derivative(const Rational& t) const {
  return ((Rational(4) * t + Rational(3) * c3) * t + Rational(2) * c2) * t + c1;
}

std::pair<MonicQuartic, MonicQuartic> build_quartics(const BigInt& p, const BigInt& q, const BigInt& r) {
  if (p.is_zero() || q.is_zero() || r.is_zero()) throw DomainError("p, q and r must all be nonzero");
  const BigInt d = forms::coeff_d(p, r);
  if (d.is_zero()) throw DegenerateError("p^4 - r^4 = 0; the quartics are undefined");
  const Rational ratio(forms::coeff_e(p, q), d);
  const Rational ratio_sq = ratio * ratio;
  MonicQuartic q1{Rational(-2) * ratio, Rational(0), Rational(2) * ratio_sq, -ratio_sq};
  MonicQuartic q2{Rational(-2), Rational(0), Rational(2) * ratio, -ratio_sq};
  return {q1, q2};
}

std::optional<CurvePoint> verify_square_point(const MonicQuartic& f, const Rational& t) {
  auto y = rational_sqrt(f.eval(t));
  if (!y) return std::nullopt;
  return CurvePoint{t, *y};
}

const char* to_string(ConstructionStatus s) {
  switch (s) {
    case ConstructionStatus::new_point:
      return "new_point";
    case ConstructionStatus::no_new_point:
      return "no_new_point";
    case ConstructionStatus::degenerate:
      return "degenerate";
  }
  return "unknown";
}

ConstructionOutcome secant_new_point(const MonicQuartic& f, const CurvePoint& p1, const CurvePoint& p2, Sign s1,
                                     Sign s2) {
  if (p1.t == p2.t) throw DomainError("secant needs distinct t values; use the tangent construction");
  require_on_curve(f, p1);
  require_on_curve(f, p2);
  const Rational v1 = apply(s1, p1.y);
  const Rational v2 = apply(s2, p2.y);
  // g(t) - t^2 is the line through (t1, v1 - t1^2) and (t2, v2 - t2^2).
  const Rational w1 = v1 - p1.t * p1.t;
  const Rational w2 = v2 - p2.t * p2.t;
  Rational g1 = (w1 - w2) / (p1.t - p2.t);
  Rational g0 = w1 - g1 * p1.t;
  return finish(f, {s1, s2}, std::move(g1), std::move(g0), {p1.t, p2.t});
}

std::vector<ConstructionOutcome> secant_variants(const MonicQuartic& f, const CurvePoint& p1, const CurvePoint& p2) {
  std::vector<ConstructionOutcome> out;
  for (Sign s1 : {Sign::plus, Sign::minus}) {
    for (Sign s2 : {Sign::plus, Sign::minus}) out.push_back(secant_new_point(f, p1, p2, s1, s2));
  }
  return out;
}

ConstructionOutcome tangent_new_point(const MonicQuartic& f, const CurvePoint& p, Sign s) {
  if (p.y.is_zero()) throw DegenerateError("tangent construction undefined at a point with y = 0");
  require_on_curve(f, p);
  const Rational v = apply(s, p.y);
  Rational g1 = f.derivative(p.t) / (Rational(2) * v) - Rational(2) * p.t;
  Rational g0 = v - p.t * p.t - g1 * p.t;
  return finish(f, {s}, std::move(g1), std::move(g0), {p.t, p.t});
}

std::vector<ConstructionOutcome> tangent_variants(const MonicQuartic& f, const CurvePoint& p) {
  return {tangent_new_point(f, p, Sign::plus), tangent_new_point(f, p, Sign::minus)};
}

}  // namespace biquad
