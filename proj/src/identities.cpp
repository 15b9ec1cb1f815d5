#include "biquad/identities.hpp"

#include <algorithm>
#include <functional>

#include "biquad/family_forms.hpp"
#include "biquad/multipoly.hpp"
#include "biquad/quartic.hpp"

namespace biquad {

namespace {

using forms::sq;

IdentityResult zero_check(std::string name, const MultiPoly& lhs, const MultiPoly& rhs) {
  const MultiPoly diff = lhs - rhs;
  IdentityResult res;
  res.name = std::move(name);
  res.degree = std::max(lhs.total_degree(), rhs.total_degree());
  res.passed = diff.is_zero();
  res.detail = "degree-" + std::to_string(res.degree) + " zero polynomial";
  if (!res.passed) res.detail += " (residual has " + std::to_string(diff.term_count()) + " terms)";
  return res;
}

IdentityResult all_of(std::string name, const std::vector<IdentityResult>& parts, const std::string& what) {
  IdentityResult res;
  res.name = std::move(name);
  res.passed = std::all_of(parts.begin(), parts.end(), [](const IdentityResult& r) { return r.passed; });
  for (const auto& p : parts) res.degree = std::max(res.degree, p.degree);
  res.detail = std::to_string(parts.size()) + " " + what + ", max degree " + std::to_string(res.degree);
  return res;
}

MultiPoly sum_sq(const std::array<MultiPoly, 3>& v) { return sq(v[0]) + sq(v[1]) + sq(v[2]); }
MultiPoly prod3(const std::array<MultiPoly, 3>& v) { return v[0] * v[1] * v[2]; }

void substitution_identities(std::vector<IdentityResult>& out) {
  const PolyRing ring({"p", "q", "r", "t", "u"});
  const auto p = ring.var("p"), q = ring.var("q"), r = ring.var("r"), t = ring.var("t"), u = ring.var("u");
  const auto one = ring.constant(1);
  const auto six = forms::substitution(p, q, r, t, u, one);

  out.push_back(zero_check("substitution product identity", prod3(six.x), prod3(six.y)));

  const auto d = forms::coeff_d(p, r);
  const auto e = forms::coeff_e(p, q);
  const auto linear = u * ((sq(t) * d - e) * u + BigInt(2) * (t * d - e));
  out.push_back(zero_check("substitution sum reduces to u*((t^2 D - E) u + 2 (t D - E))",
                           sum_sq(six.x) - sum_sq(six.y), linear));

  // Multiplying the substitution by the denominator of u reproduces the
  // bracket forms of the scaled solution.
  const auto [u_num, u_den] = forms::solve_u_parts(p, q, r, t);
  const auto tu1 = t * u_num + u_den;
  const auto u1 = u_num + u_den;
  const forms::Six<MultiPoly> cleared{{-(tu1 * sq(p)), u1 * sq(q), u_den * sq(r)},
                                      {u1 * sq(p), u_den * sq(q), -(tu1 * sq(r))}};
  const auto scaled = forms::scaled_solution(p, q, r, t, one, one);
  std::vector<IdentityResult> parts;
  for (std::size_t i = 0; i < 3; ++i) {
    parts.push_back(zero_check("x", cleared.x[i], scaled.x[i]));
    parts.push_back(zero_check("y", cleared.y[i], scaled.y[i]));
  }
  out.push_back(all_of("solve_u root turns the substitution into the scaled solution", parts, "entries"));
}

void scaled_solution_identities(std::vector<IdentityResult>& out) {
  const PolyRing ring({"p", "q", "r", "t", "k"});
  const auto p = ring.var("p"), q = ring.var("q"), r = ring.var("r"), t = ring.var("t"), k = ring.var("k");
  const auto s = forms::scaled_solution(p, q, r, t, ring.constant(1), k);

  out.push_back(zero_check("scaled solution sum-of-squares identity", sum_sq(s.x), sum_sq(s.y)));
  out.push_back(zero_check("scaled solution product identity", prod3(s.x), prod3(s.y)));

  const auto p2 = sq(p), q2 = sq(q), r2 = sq(r);
  out.push_back(all_of("ratio identities y1 q^2 = x2 p^2, y2 r^2 = x3 q^2, y3 p^2 = x1 r^2",
                       {zero_check("y1", s.y[0] * q2, s.x[1] * p2), zero_check("y2", s.y[1] * r2, s.x[2] * q2),
                        zero_check("y3", s.y[2] * p2, s.x[0] * r2)},
                       "cross-multiplied ratios"));

  // D^2 Q1 = bracket(x1) * bracket(x3) and D^2 Q2 = bracket(x2) * bracket(x3).
  const auto b = forms::brackets(p, q, r, t, ring.constant(1));
  const auto d = forms::coeff_d(p, r);
  const auto e = forms::coeff_e(p, q);
  const auto t3 = t * t * t;
  const auto quartic1 = sq(d) * sq(sq(t)) - BigInt(2) * d * e * t3 + BigInt(2) * sq(e) * t - sq(e);
  const auto quartic2 = sq(d) * sq(sq(t)) - BigInt(2) * sq(d) * t3 + BigInt(2) * d * e * t - sq(e);
  out.push_back(zero_check("first quartic times D^2 equals x1*x3 bracket product", quartic1, b[0] * b[2]));
  out.push_back(zero_check("second quartic times D^2 equals x2*x3 bracket product", quartic2, b[1] * b[2]));
}

void condition_identities(std::vector<IdentityResult>& out) {
  {
    const PolyRing ring({"p", "q", "r"});
    const auto p = ring.var("p"), q = ring.var("q"), r = ring.var("r");
    const auto c1 = forms::t_candidate_1_parts(p, q, r);
    const auto c2 = forms::t_candidate_2_parts(p, q, r);
    const auto cross = c1.num_a * c1.num_b * c2.den_a * c2.den_b - c2.num_a * c2.num_b * c1.den_a * c1.den_b;
    const auto f = forms::condition_factors(p, q, r);
    const auto factored = BigInt(-4) * (sq(p) - sq(r)) * f[0] * f[1] * f[2] * f[3] * f[4];
    out.push_back(zero_check("equating the two t values gives -4 (p^2 - r^2) times the condition factors", cross,
                             factored));

    const auto cubic = forms::condition_cubic(p, q, r);
    const std::vector<Rational> singular{Rational(-1), Rational(-1), Rational(1)};
    IdentityResult sing;
    sing.name = "condition cubic is singular at (-1, -1, 1)";
    sing.degree = cubic.total_degree();
    sing.passed = cubic.eval(singular).is_zero() && cubic.derivative("p").eval(singular).is_zero() &&
                  cubic.derivative("q").eval(singular).is_zero() && cubic.derivative("r").eval(singular).is_zero();
    sing.detail = "value and gradient vanish";
    out.push_back(sing);
  }

  const PolyRing ring({"a", "b"});
  const auto a = ring.var("a"), b = ring.var("b");
  const auto [p, q, r] = forms::parametrize(a, b);
  {
    // The composition cancels completely, so report the degree of the substituted terms.
    auto res = zero_check("condition cubic vanishes on the (a, b) parametrization", forms::condition_cubic(p, q, r),
                          ring.zero());
    res.degree = 3 * std::max({p.total_degree(), q.total_degree(), r.total_degree()});
    res.detail = "degree-" + std::to_string(res.degree) + " zero polynomial";
    out.push_back(res);
  }

  const auto tab = forms::t_of_ab_parts(a, b);
  const auto tab_den = tab.den_a * tab.den_b * tab.den_c;
  const auto c1 = forms::t_candidate_1_parts(p, q, r);
  const auto c2 = forms::t_candidate_2_parts(p, q, r);
  out.push_back(all_of("both t values equal t(a, b) on the parametrization",
                       {zero_check("t1", c1.num_a * c1.num_b * tab_den, tab.num * c1.den_a * c1.den_b),
                        zero_check("t2", c2.num_a * c2.num_b * tab_den, tab.num * c2.den_a * c2.den_b)},
                       "cross-multiplied equalities"));
}

void final_family_identities(std::vector<IdentityResult>& out) {
  const PolyRing ring({"a", "b"});
  const auto a = ring.var("a"), b = ring.var("b");
  const auto roots = forms::final_roots(a, b);
  auto fourth_sum = [](const std::array<MultiPoly, 3>& v) {
    return forms::fourth(v[0]) + forms::fourth(v[1]) + forms::fourth(v[2]);
  };
  out.push_back(zero_check("final family sum identity", fourth_sum(roots.x), fourth_sum(roots.y)));
  out.push_back(zero_check("final family product identity", prod3(roots.x), prod3(roots.y)));

  // The scaled solution at the parametrized (p, q, r) and t = num/den is
  // proportional to the squared roots: all 15 pairwise cross products vanish.
  const auto [p, q, r] = forms::parametrize(a, b);
  const auto tab = forms::t_of_ab_parts(a, b);
  const auto s = forms::scaled_solution(p, q, r, tab.num, tab.den_a * tab.den_b * tab.den_c, ring.constant(1));
  const std::array<MultiPoly, 6> v{s.x[0], s.x[1], s.x[2], s.y[0], s.y[1], s.y[2]};
  const std::array<MultiPoly, 6> w{sq(roots.x[0]), sq(roots.x[1]), sq(roots.x[2]),
                                   sq(roots.y[0]), sq(roots.y[1]), sq(roots.y[2])};
  std::vector<IdentityResult> parts;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) parts.push_back(zero_check("pair", v[i] * w[j], v[j] * w[i]));
  }
  out.push_back(all_of("scaled solution on the parametrization is proportional to the final family", parts,
                       "cross products"));
}

void listed_points(std::vector<InformationalResult>& out) {
  struct Listed {
    const char* name;
    bool second_curve;
    std::function<Rational(const BigInt&, const BigInt&, const BigInt&)> t;
    std::function<Rational(const BigInt&, const BigInt&, const BigInt&)> y;
  };
  using forms::fourth;
  const std::vector<Listed> listed{
      {"first listed point on Q1", false,
       [](auto& p, auto& q, auto& r) { return Rational(fourth(q) - fourth(r), fourth(p) - fourth(r)); },
       [](auto&, auto&, auto&) { return Rational(1); }},
      {"second listed point on Q1", false,
       [](auto& p, auto& q, auto& r) {
         return Rational(BigInt(2) * p * q * (sq(p) + sq(q)) * (sq(q) - sq(r)), (sq(p) - sq(r)) * sq(sq(p) + sq(r)));
       },
       [](auto& p, auto& q, auto& r) { return Rational(sq(p) + sq(q), sq(p) + sq(r)); }},
      {"first listed point on Q2", true,
       [](auto& p, auto& q, auto& r) {
         return -Rational((fourth(p) - fourth(q)) * (fourth(q) - fourth(r)), sq(fourth(p) - fourth(r)));
       },
       [](auto& p, auto& q, auto& r) { return Rational(fourth(p) - fourth(q), fourth(p) - fourth(r)); }},
      {"second listed point on Q2", true,
       [](auto& p, auto& q, auto& r) {
         return Rational(BigInt(2) * p * r * (sq(p) - sq(q)) * (sq(q) - sq(r)), sq(sq(p) - sq(r)) * (sq(p) + sq(r)));
       },
       [](auto& p, auto& q, auto& r) { return Rational(sq(p) - sq(q), sq(p) - sq(r)); }},
  };
  const std::vector<std::array<BigInt, 3>> samples{{3, 2, 1}, {9, -7, -1}};
  for (const auto& [p, q, r] : samples) {
    const auto [q1, q2] = build_quartics(p, q, r);
    for (const auto& l : listed) {
      const MonicQuartic& f = l.second_curve ? q2 : q1;
      const Rational t = l.t(p, q, r);
      const Rational y = l.y(p, q, r);
      const Rational value = f.eval(t);
      InformationalResult info;
      info.name = l.name;
      info.curve = l.second_curve ? "Q2" : "Q1";
      info.pqr = "(" + p.to_string() + "," + q.to_string() + "," + r.to_string() + ")";
      info.t = t.to_string();
      info.value = value.to_string();
      info.claimed_y = y.to_string();
      info.value_is_square = rational_sqrt(value).has_value();
      info.matches_claim = value == y * y;
      out.push_back(std::move(info));
    }
  }
}

}  // namespace

std::string IdentityResult::line() const { return name + ": " + detail + ": " + (passed ? "PASS" : "FAIL"); }

bool IdentityReport::all_passed() const {
  return std::all_of(identities.begin(), identities.end(), [](const IdentityResult& r) { return r.passed; });
}

IdentityReport run_identity_suite() {
  IdentityReport rep;
  substitution_identities(rep.identities);
  scaled_solution_identities(rep.identities);
  condition_identities(rep.identities);
  final_family_identities(rep.identities);
  listed_points(rep.informational);
  return rep;
}

}  // namespace biquad
