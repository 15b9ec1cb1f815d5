#include "biquad/family.hpp"

#include <algorithm>

#include "biquad/errors.hpp"
#include "biquad/family_forms.hpp"

namespace biquad {

namespace {

void require_nonzero_pqr(const BigInt& p, const BigInt& q, const BigInt& r) {
  if (p.is_zero() || q.is_zero() || r.is_zero()) throw DomainError("p, q and r must all be nonzero");
}

BigInt lcm(const BigInt& a, const BigInt& b) { return divexact(a * b, gcd(a, b)); }

BigInt gcd_of(const std::array<BigInt, 3>& x, const std::array<BigInt, 3>& y) {
  BigInt g = 0;
  for (const auto& v : x) g = gcd(g, v);
  for (const auto& v : y) g = gcd(g, v);
  return g;
}

Rational candidate_value(const forms::CandidateParts<BigInt>& parts, const char* bracket_name) {
  const BigInt p_minus_r_sq = parts.den_a;
  if (p_minus_r_sq.is_zero()) throw DegenerateError("denominator factor p^2 - r^2 vanishes");
  if (parts.den_b.is_zero()) throw DegenerateError(std::string("denominator factor ") + bracket_name + " vanishes");
  return Rational(parts.num_a * parts.num_b, parts.den_a * parts.den_b);
}

}  // namespace

ParamPoint::ParamPoint(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.is_zero() && b_.is_zero()) throw DomainError("(a, b) = (0, 0) is not a parameter point");
}

FamilyParams::FamilyParams(BigInt p, BigInt q, BigInt r, Rational t, std::optional<Rational> u,
                           std::optional<Rational> k)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), t_(std::move(t)), u_(std::move(u)), k_(std::move(k)) {
  require_nonzero_pqr(p_, q_, r_);
  d_ = forms::coeff_d(p_, r_);
  e_ = forms::coeff_e(p_, q_);
}

// --- triads ----------------------------------------------------------------

Triad::Triad(std::array<BigInt, 3> values) : v_(std::move(values)) {
  for (const auto& v : v_) {
    if (v < BigInt(1)) throw DomainError("triad entries must be positive, got " + v.to_string());
  }
  std::sort(v_.begin(), v_.end());
}

BigInt Triad::sum4() const { return pow(v_[0], 4) + pow(v_[1], 4) + pow(v_[2], 4); }

BigInt Triad::product() const { return v_[0] * v_[1] * v_[2]; }

TriadPair TriadPair::make(Triad a, Triad b, std::optional<ParamPoint> source) {
  if (b < a) std::swap(a, b);
  BigInt s = a.sum4();
  BigInt pr = a.product();
  if (s != b.sum4()) throw ConsistencyError("triad pair with unequal sums of fourth powers");
  if (pr != b.product()) throw ConsistencyError("triad pair with unequal products");
  const bool primitive = gcd_of(a.values(), b.values()) == BigInt(1);
  return TriadPair(std::move(a), std::move(b), std::move(s), std::move(pr), primitive, std::move(source));
}

TriadPair TriadPair::with_source(std::optional<ParamPoint> source) const {
  TriadPair out = *this;
  out.source_ = std::move(source);
  return out;
}

std::strong_ordering operator<=>(const TriadPair& l, const TriadPair& r) {
  if (auto c = l.sum4_ <=> r.sum4_; c != 0) return c;
  if (auto c = l.left_ <=> r.left_; c != 0) return c;
  return l.right_ <=> r.right_;
}

TriadCheck check_triads(const Triad& left, const Triad& right) {
  TriadCheck c;
  c.sum4_left = left.sum4();
  c.sum4_right = right.sum4();
  c.prod_left = left.product();
  c.prod_right = right.product();
  c.sums_equal = c.sum4_left == c.sum4_right;
  c.products_equal = c.prod_left == c.prod_right;
  c.trivial = left == right;
  return c;
}

TriadPair canonicalize(const std::array<BigInt, 3>& x, const std::array<BigInt, 3>& y,
                       std::optional<ParamPoint> source) {
  std::array<BigInt, 3> ax, ay;
  for (std::size_t i = 0; i < 3; ++i) {
    if (x[i].is_zero() || y[i].is_zero()) throw DegenerateError("zero entry in triad pair");
    ax[i] = abs(x[i]);
    ay[i] = abs(y[i]);
  }
  const BigInt g = gcd_of(ax, ay);
  for (std::size_t i = 0; i < 3; ++i) {
    ax[i] = divexact(ax[i], g);
    ay[i] = divexact(ay[i], g);
  }
  TriadPair pair = TriadPair::make(Triad(ax), Triad(ay), std::move(source));
  if (!pair.primitive()) throw ConsistencyError("canonical pair is not primitive");
  return pair;
}

bool is_trivial(const TriadPair& pair) { return pair.left() == pair.right(); }

// --- construction steps ----------------------------------------------------

SixRationals substitute_xy(const BigInt& p, const BigInt& q, const BigInt& r, const Rational& t, const Rational& u) {
  require_nonzero_pqr(p, q, r);
  auto six = forms::substitution<Rational>(p, q, r, t, u, Rational(1));
  return {six.x, six.y};
}

Rational solve_u(const BigInt& p, const BigInt& q, const BigInt& r, const Rational& t) {
  require_nonzero_pqr(p, q, r);
  const auto [num, den] = forms::solve_u_parts<Rational>(p, q, r, t);
  if (den.is_zero()) throw DegenerateError("t^2 (p^4 - r^4) - (p^4 - q^4) vanishes; no finite root u");
  if (num.is_zero()) throw DegenerateError("t (p^4 - r^4) = p^4 - q^4; the only root is the trivial u = 0");
  return num / den;
}

SolutionSix param_solution(const BigInt& p, const BigInt& q, const BigInt& r, const Rational& t, const Rational& k) {
  FamilyParams params(p, q, r, t, std::nullopt, k);
  if (params.d().is_zero()) throw DegenerateError("p^4 - r^4 = 0; the scaled solution collapses");

  const Rational one(1);
  auto six = forms::scaled_solution<Rational>(p, q, r, t, one, k);
  BigInt scale = 1;
  for (const auto& v : six.x) scale = lcm(scale, v.den());
  for (const auto& v : six.y) scale = lcm(scale, v.den());

  SolutionSix out;
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational xs = six.x[i] * Rational(scale);
    const Rational ys = six.y[i] * Rational(scale);
    if (!xs.is_integer() || !ys.is_integer()) throw ConsistencyError("denominator clearing left a fraction");
    out.x[i] = xs.num();
    out.y[i] = ys.num();
  }
  out.provenance = FamilyParams(p, q, r, t, std::nullopt, k * Rational(scale));
  return out;
}

SystemReport verify_system(const SolutionSix& s) {
  SystemReport rep;
  rep.sum_x = s.x[0] * s.x[0] + s.x[1] * s.x[1] + s.x[2] * s.x[2];
  rep.sum_y = s.y[0] * s.y[0] + s.y[1] * s.y[1] + s.y[2] * s.y[2];
  rep.product_x = s.x[0] * s.x[1] * s.x[2];
  rep.product_y = s.y[0] * s.y[1] * s.y[2];
  rep.sums_equal = rep.sum_x == rep.sum_y;
  rep.products_equal = rep.product_x == rep.product_y;
  return rep;
}

Rational t_candidate_1(const BigInt& p, const BigInt& q, const BigInt& r) {
  return candidate_value(forms::t_candidate_1_parts(p, q, r),
                         "p^4 + 2p^3q - 2p^2r^2 + 2pq^3 + q^4 - 2q^2r^2 - 2r^4");
}

Rational t_candidate_2(const BigInt& p, const BigInt& q, const BigInt& r) {
  return candidate_value(forms::t_candidate_2_parts(p, q, r),
                         "p^4 - 2p^3r - 2p^2q^2 - 2pr^3 - 2q^4 - 2q^2r^2 + r^4");
}

BigInt condition_value(const BigInt& p, const BigInt& q, const BigInt& r) { return forms::condition_cubic(p, q, r); }

CubicPoint parametrize_cubic(const ParamPoint& pt) {
  auto [p, q, r] = forms::parametrize(pt.a(), pt.b());
  CubicPoint out{p, q, r, std::nullopt};
  if (p.is_zero() || q.is_zero() || r.is_zero()) {
    out.degenerate_reason = "a coordinate of (p, q, r) is zero";
  } else if (forms::coeff_d(p, r).is_zero()) {
    out.degenerate_reason = "p^4 = r^4";
  }
  return out;
}

Rational t_of_ab(const ParamPoint& pt) {
  const auto parts = forms::t_of_ab_parts(pt.a(), pt.b());
  if (parts.den_a.is_zero()) throw DegenerateError("a = 0 makes t undefined");
  if (parts.den_b.is_zero()) throw DegenerateError("a = b makes t undefined");
  // 5a^2 - 5ab + 2b^2 has discriminant -15 b^2, so it only vanishes at the origin.
  return Rational(parts.num, parts.den_a * parts.den_b * parts.den_c);
}

FamilyResult final_family(const ParamPoint& pt) {
  const auto roots = forms::final_roots(pt.a(), pt.b());

  FamilyResult out{pt, parametrize_cubic(pt), std::nullopt, {}, {}, {}, std::nullopt, false, std::nullopt};
  if (!pt.a().is_zero() && pt.a() != pt.b()) out.t = t_of_ab(pt);

  for (std::size_t i = 0; i < 3; ++i) {
    out.squares.x[i] = roots.x[i] * roots.x[i];
    out.squares.y[i] = roots.y[i] * roots.y[i];
    out.root_x[i] = abs(roots.x[i]);
    out.root_y[i] = abs(roots.y[i]);
  }
  out.squares.provenance = pt;

  const bool any_zero = std::any_of(out.root_x.begin(), out.root_x.end(), [](const BigInt& v) { return v.is_zero(); }) ||
                        std::any_of(out.root_y.begin(), out.root_y.end(), [](const BigInt& v) { return v.is_zero(); });
  if (any_zero) {
    if (pt.b().is_zero()) {
      out.degenerate_reason = "b = 0 zeroes x3 and y2";
    } else if (pt.b() == BigInt(2) * pt.a()) {
      out.degenerate_reason = "b = 2a zeroes x1 and y1";
    } else {
      throw ConsistencyError("family entry vanished away from b = 0 and b = 2a");
    }
    return out;
  }

  auto sorted_x = out.root_x;
  auto sorted_y = out.root_y;
  std::sort(sorted_x.begin(), sorted_x.end());
  std::sort(sorted_y.begin(), sorted_y.end());
  out.trivial = sorted_x == sorted_y;
  out.pair = canonicalize(out.root_x, out.root_y, pt);
  return out;
}

RangeReport generate_range(const RangeSpec& spec) {
  RangeReport rep;
  std::vector<TriadPair> found;
  for (BigInt a = spec.a_min; a <= spec.a_max; a += BigInt(1)) {
    for (BigInt b = spec.b_min; b <= spec.b_max; b += BigInt(1)) {
      if (a.is_zero() && b.is_zero()) continue;
      ++rep.points;
      const FamilyResult res = final_family(ParamPoint(a, b));
      if (res.degenerate_reason) {
        ++rep.degenerate;
        continue;
      }
      // a = 0 and a = b leave t undefined; both collapse the triads to equal ones.
      if (res.trivial || !res.t) {
        ++rep.trivial;
        continue;
      }
      if (spec.max_element && std::max(res.pair->left().max(), res.pair->right().max()) > *spec.max_element) {
        ++rep.above_bound;
        continue;
      }
      found.push_back(*res.pair);
    }
  }
  // Stable sort keeps grid order within equal pairs, so unique() retains the
  // first source.
  std::stable_sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  rep.pairs = std::move(found);
  return rep;
}

}  // namespace biquad
