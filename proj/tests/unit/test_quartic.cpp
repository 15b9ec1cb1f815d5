#include <doctest.h>

#include <random>

#include "biquad/errors.hpp"
#include "biquad/family.hpp"
#include "biquad/quartic.hpp"

using namespace biquad;

namespace {

Rational R(const char* s) { return Rational::from_string(s); }

MonicQuartic Q(const char* c3, const char* c2, const char* c1, const char* c0) {
  return {R(c3), R(c2), R(c1), R(c0)};
}

Rational random_rational(std::mt19937_64& rng, long long num_max, long long den_max) {
  std::uniform_int_distribution<long long> n(-num_max, num_max), d(1, den_max);
  return Rational(BigInt(n(rng)), BigInt(d(rng)));
}

BigInt random_nonzero(std::mt19937_64& rng, long long lim) {
  std::uniform_int_distribution<long long> d(-lim, lim);
  long long v = 0;
  while (v == 0) v = d(rng);
  return BigInt(v);
}

void check_outcome(const MonicQuartic& f, const ConstructionOutcome& o) {
  if (o.status == ConstructionStatus::new_point) {
    REQUIRE(o.point.has_value());
    CHECK(o.point->y.sign() >= 0);
    CHECK(o.point->y * o.point->y == f.eval(o.point->t));
    // The flipped sign is a point too, so the value is a square.
    CHECK(verify_square_point(f, o.point->t).has_value());
  } else {
    CHECK_FALSE(o.point.has_value());
  }
}

}  // namespace

TEST_CASE("build_quartics") {
  const auto [q1, q2] = build_quartics(BigInt(3), BigInt(2), BigInt(1));
  CHECK(q1 == Q("-13/8", "0", "169/128", "-169/256"));
  CHECK(q2 == Q("-2", "0", "13/8", "-169/256"));
  CHECK_THROWS_AS(build_quartics(BigInt(2), BigInt(1), BigInt(-2)), DegenerateError);
  CHECK_THROWS_AS(build_quartics(BigInt(2), BigInt(0), BigInt(1)), DomainError);
}

TEST_CASE("quartics times D^2 are the bracket products of the scaled solution") {
  // For p = 3, q = 2, r = 1 the scaled solution at k = 1 has x1 = p^2 b0,
  // x2 = q^2 b1, x3 = r^2 b2 where the b_i are the brackets; compare at many t.
  const BigInt p(3), q(2), r(1);
  const auto [q1, q2] = build_quartics(p, q, r);
  const Rational D(BigInt(80)), E(BigInt(65));
  for (int i = -6; i <= 6; ++i) {
    const Rational t(BigInt(i), BigInt(5));
    const Rational b0 = D * t * t - Rational(2) * E * t + E;
    const Rational b1 = D * t * t - Rational(2) * D * t + E;
    const Rational b2 = D * t * t - E;
    CHECK(D * D * q1.eval(t) == b0 * b2);
    CHECK(D * D * q2.eval(t) == b1 * b2);
  }
}

TEST_CASE("eval_quartic") {
  const auto [q1, q2] = build_quartics(BigInt(3), BigInt(2), BigInt(1));
  CHECK(eval_quartic(q1, R("65/72")) == R("169/419904"));
  CHECK(eval_quartic(q2, R("-65/72")) == R("231361/26873856"));
  CHECK(eval_quartic(Q("0", "0", "0", "0"), R("-2/3")) == R("16/81"));
  CHECK(q1.derivative(R("0")) == R("169/128"));
}

TEST_CASE("verify_square_point") {
  const auto [q1, q2] = build_quartics(BigInt(3), BigInt(2), BigInt(1));
  const auto a = verify_square_point(q1, R("65/72"));
  REQUIRE(a.has_value());
  CHECK(a->y == R("13/648"));
  const auto b = verify_square_point(q2, R("-65/72"));
  REQUIRE(b.has_value());
  CHECK(b->y == R("481/5184"));
  CHECK_FALSE(verify_square_point(q1, R("0")).has_value());
}

TEST_CASE("t candidates give square values on random parameters") {
  std::mt19937_64 rng(21);
  int checked = 0;
  while (checked < 100) {
    const auto p = random_nonzero(rng, 40), q = random_nonzero(rng, 40), r = random_nonzero(rng, 40);
    if (abs(p) == abs(r)) continue;
    Rational t1, t2;
    try {
      t1 = t_candidate_1(p, q, r);
      t2 = t_candidate_2(p, q, r);
    } catch (const DegenerateError&) {
      continue;
    }
    const auto [q1, q2] = build_quartics(p, q, r);
    CHECK(verify_square_point(q1, t1).has_value());
    CHECK(verify_square_point(q2, t2).has_value());
    ++checked;
  }
}

TEST_CASE("secant examples") {
  const auto f = Q("0", "-5", "0", "4");
  const CurvePoint p1{R("0"), R("2")}, p2{R("1"), R("0")};

  const auto pp = secant_new_point(f, p1, p2, Sign::plus, Sign::plus);
  CHECK(pp.g1 == R("-3"));
  CHECK(pp.g0 == R("2"));
  CHECK(pp.status == ConstructionStatus::new_point);
  CHECK(pp.point == CurvePoint{R("2"), R("0")});

  const auto mp = secant_new_point(f, p1, p2, Sign::minus, Sign::plus);
  CHECK(mp.g1 == R("1"));
  CHECK(mp.g0 == R("-2"));
  CHECK(mp.point == CurvePoint{R("-2"), R("0")});

  // f = (t^2 + t + 1)^2
  const auto sq = Q("2", "3", "2", "1");
  const auto deg = secant_new_point(sq, {R("0"), R("1")}, {R("1"), R("3")}, Sign::plus, Sign::plus);
  CHECK(deg.status == ConstructionStatus::degenerate);
  CHECK_FALSE(deg.point.has_value());

  CHECK_THROWS_AS(secant_new_point(f, p1, p1, Sign::plus, Sign::plus), DomainError);
  CHECK_THROWS_AS(secant_new_point(f, p1, {R("1"), R("1")}, Sign::plus, Sign::plus), DomainError);

  const auto all = secant_variants(f, p1, p2);
  REQUIRE(all.size() == 4);
  CHECK(all[0].signs == std::vector<Sign>{Sign::plus, Sign::plus});
  CHECK(all[3].signs == std::vector<Sign>{Sign::minus, Sign::minus});
}

TEST_CASE("tangent examples") {
  const auto f = Q("-2", "0", "0", "1");
  const CurvePoint p{R("0"), R("1")};
  const auto plus = tangent_new_point(f, p, Sign::plus);
  CHECK(plus.g1 == R("0"));
  CHECK(plus.g0 == R("1"));
  CHECK(plus.point == CurvePoint{R("-1"), R("2")});
  const auto minus = tangent_new_point(f, p, Sign::minus);
  CHECK(minus.g0 == R("-1"));
  CHECK(minus.point == CurvePoint{R("1"), R("0")});

  const auto flat = tangent_new_point(Q("0", "0", "0", "1"), p, Sign::plus);
  CHECK(flat.status == ConstructionStatus::no_new_point);
  CHECK_FALSE(flat.point.has_value());

  CHECK_THROWS_AS(tangent_new_point(Q("0", "-5", "0", "4"), {R("1"), R("0")}, Sign::plus), DegenerateError);
  CHECK_THROWS_AS(tangent_new_point(f, {R("0"), R("2")}, Sign::plus), DomainError);
  CHECK(tangent_variants(f, p).size() == 2);
}

TEST_CASE("secant points lie on the curve for random configurations") {
  std::mt19937_64 rng(22);
  int configs = 0;
  while (configs < 100) {
    const Rational c3 = random_rational(rng, 20, 6), c2 = random_rational(rng, 20, 6);
    const Rational t1 = random_rational(rng, 12, 5), t2 = random_rational(rng, 12, 5);
    if (t1 == t2) continue;
    const Rational y1 = random_rational(rng, 30, 7), y2 = random_rational(rng, 30, 7);
    // Solve c1 t + c0 = y^2 - t^4 - c3 t^3 - c2 t^2 at both points.
    auto rhs = [&](const Rational& t, const Rational& y) {
      return y * y - pow(t, 4) - c3 * pow(t, 3) - c2 * t * t;
    };
    const Rational c1 = (rhs(t1, y1) - rhs(t2, y2)) / (t1 - t2);
    const Rational c0 = rhs(t1, y1) - c1 * t1;
    const MonicQuartic f{c3, c2, c1, c0};
    for (const auto& o : secant_variants(f, {t1, abs(y1)}, {t2, abs(y2)})) check_outcome(f, o);
    ++configs;
  }
}

TEST_CASE("tangent points lie on the curve for random configurations") {
  std::mt19937_64 rng(23);
  int configs = 0;
  while (configs < 100) {
    const Rational c3 = random_rational(rng, 20, 6), c2 = random_rational(rng, 20, 6),
                   c1 = random_rational(rng, 20, 6);
    const Rational t = random_rational(rng, 12, 5), y = random_rational(rng, 30, 7);
    if (y.is_zero()) continue;
    const Rational c0 = y * y - pow(t, 4) - c3 * pow(t, 3) - c2 * t * t - c1 * t;
    const MonicQuartic f{c3, c2, c1, c0};
    for (const auto& o : tangent_variants(f, {t, abs(y)})) check_outcome(f, o);
    ++configs;
  }
}

TEST_CASE("secant on the family quartics reaches new square points") {
  // Start from the square at t_candidate_1 and its tangent image, then chord.
  const auto [q1, q2] = build_quartics(BigInt(3), BigInt(2), BigInt(1));
  const auto base = *verify_square_point(q1, R("65/72"));
  for (const auto& o : tangent_variants(q1, base)) {
    check_outcome(q1, o);
    if (o.point && o.point->t != base.t) {
      for (const auto& s : secant_variants(q1, base, *o.point)) check_outcome(q1, s);
    }
  }
}
