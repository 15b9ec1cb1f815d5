#include <doctest.h>

#include <random>

#include "biquad/errors.hpp"
#include "biquad/family_forms.hpp"
#include "biquad/multipoly.hpp"

using biquad::ArithKind;
using biquad::BigInt;
using biquad::MultiPoly;
using biquad::PolyRing;
using biquad::Rational;

TEST_CASE("difference of squares expands and cancels") {
  const PolyRing ring({"a", "b"});
  const auto a = ring.var("a"), b = ring.var("b");
  const auto lhs = (a + b) * (a - b);
  const auto rhs = a * a - b * b;
  CHECK(lhs == rhs);
  CHECK(biquad::poly_is_zero(lhs - rhs));
  CHECK(lhs.total_degree() == 2);
  CHECK(lhs.is_homogeneous());
  CHECK(lhs.to_string() == "a^2 - b^2");
}

TEST_CASE("poly_arith matches the operators") {
  const PolyRing ring({"x", "y"});
  const auto x = ring.var("x"), y = ring.var("y");
  const auto f = x.pow(2) + BigInt(3) * y;
  const auto g = x - y + BigInt(1);
  CHECK(biquad::poly_arith(f, g, ArithKind::add) == f + g);
  CHECK(biquad::poly_arith(f, g, ArithKind::sub) == f - g);
  CHECK(biquad::poly_arith(f, g, ArithKind::mul) == f * g);
  CHECK((x + y).pow(3).term_count() == 4);
  CHECK((x + y).pow(0) == ring.constant(BigInt(1)));
}

TEST_CASE("zero polynomial and constants") {
  const PolyRing ring({"p"});
  CHECK(ring.zero().total_degree() == -1);
  CHECK(ring.zero().to_string() == "0");
  CHECK(ring.constant(BigInt(0)).is_zero());
  CHECK(ring.constant(BigInt(-4)).to_string() == "-4");
  CHECK((BigInt(0) * ring.var("p") + BigInt(0)).is_zero());
  CHECK_FALSE((ring.var("p") + BigInt(1)).is_homogeneous());
}

TEST_CASE("mismatched variable lists and unknown names are rejected") {
  const auto a = MultiPoly::variable({"a", "b"}, "a");
  const auto c = MultiPoly::variable({"c"}, "c");
  CHECK_THROWS_AS(a + c, biquad::DomainError);
  CHECK_THROWS_AS(a * c, biquad::DomainError);
  CHECK_THROWS_AS(MultiPoly::variable({"a"}, "z"), biquad::DomainError);
  CHECK_THROWS_AS(MultiPoly({"a", "a"}), biquad::DomainError);
  CHECK_THROWS_AS(a.derivative("z"), biquad::DomainError);
}

TEST_CASE("evaluation and derivatives") {
  const PolyRing ring({"p", "q", "r"});
  const auto p = ring.var("p"), q = ring.var("q"), r = ring.var("r");
  const auto cubic = biquad::forms::condition_cubic(p, q, r);
  const std::vector<Rational> pt{Rational(3), Rational(2), Rational(1)};
  CHECK(cubic.eval(pt) == Rational(25));
  CHECK(cubic.eval({{"p", Rational(9)}, {"q", Rational(-7)}, {"r", Rational(-1)}}) == Rational(0));
  CHECK_THROWS_AS(cubic.eval(std::vector<Rational>{Rational(1)}), biquad::DomainError);
  CHECK_THROWS_AS(cubic.eval({{"p", Rational(1)}}), biquad::DomainError);
  const auto dp = cubic.derivative("p");
  // 3p^2 - q^2 + qr - r^2
  CHECK(dp == BigInt(3) * p * p - q * q + q * r - r * r);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-9, 9), expo(0, 3);
  const PolyRing ring({"a", "b", "c"});
  auto random_poly = [&] {
    MultiPoly f = ring.zero();
    for (int i = 0; i < 5; ++i) {
      MultiPoly term = ring.constant(BigInt(coeff(rng)));
      for (const char* v : {"a", "b", "c"}) term = term * ring.var(v).pow(static_cast<unsigned>(expo(rng)));
      f = f + term;
    }
    return f;
  };
  for (int i = 0; i < 50; ++i) {
    const auto f = random_poly(), g = random_poly(), h = random_poly();
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
    CHECK((f - f).is_zero());
    const std::vector<Rational> pt{Rational(2), Rational::from_string("-1/3"), Rational(5)};
    CHECK((f * g).eval(pt) == f.eval(pt) * g.eval(pt));
  }
}
