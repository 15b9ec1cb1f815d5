#pragma once

// Construction pipeline for two triads with equal sums of fourth powers and
// equal products: trial substitution, the scaled (p, q, r, t, k) solution,
// the two t values, the compatibility cubic and its parametrization, and the
// final (a, b) family with canonical triad pairs.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "biquad/exact.hpp"

namespace biquad {

/// (a, b) with (a, b) != (0, 0).
class ParamPoint {
 public:
  /// Throws DomainError for (0, 0).
  ParamPoint(BigInt a, BigInt b);
  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;

 private:
  BigInt a_;
  BigInt b_;
};

/// p, q, r nonzero plus the rational parameters of the scaled solution.
/// d = p^4 - r^4 and e = p^4 - q^4 are computed once at construction.
class FamilyParams {
 public:
  /// Throws DomainError if any of p, q, r is zero.
  FamilyParams(BigInt p, BigInt q, BigInt r, Rational t, std::optional<Rational> u = std::nullopt,
               std::optional<Rational> k = std::nullopt);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& r() const { return r_; }
  const Rational& t() const { return t_; }
  const std::optional<Rational>& u() const { return u_; }
  const std::optional<Rational>& k() const { return k_; }
  const BigInt& d() const { return d_; }
  const BigInt& e() const { return e_; }

 private:
  BigInt p_, q_, r_;
  Rational t_;
  std::optional<Rational> u_, k_;
  BigInt d_, e_;
};

using Provenance = std::variant<std::monostate, FamilyParams, ParamPoint>;

/// x1..x3 and y1..y3 with x1^2+x2^2+x3^2 = y1^2+y2^2+y3^2 and
/// x1 x2 x3 = y1 y2 y3 (checked by verify_system, never assumed).
struct SolutionSix {
  std::array<BigInt, 3> x;
  std::array<BigInt, 3> y;
  Provenance provenance;
};

struct SixRationals {
  std::array<Rational, 3> x;
  std::array<Rational, 3> y;
};

struct SystemReport {
  bool sums_equal = false;
  bool products_equal = false;
  BigInt sum_x, sum_y;          // sums of squares
  BigInt product_x, product_y;
  bool ok() const { return sums_equal && products_equal; }
};

/// Three positive integers, sorted ascending.
class Triad {
 public:
  /// Sorts; throws DomainError if any entry is < 1.
  explicit Triad(std::array<BigInt, 3> values);
  const std::array<BigInt, 3>& values() const { return v_; }
  const BigInt& operator[](std::size_t i) const { return v_[i]; }
  const BigInt& max() const { return v_[2]; }
  BigInt sum4() const;
  BigInt product() const;
  friend bool operator==(const Triad&, const Triad&) = default;
  friend auto operator<=>(const Triad& l, const Triad& r) { return l.v_ <=> r.v_; }

 private:
  std::array<BigInt, 3> v_;
};

/// Two triads with equal sums of fourth powers and equal products, smaller
/// triad first. sum4 and prod are stored and re-verified on construction.
class TriadPair {
 public:
  /// Orders the triads and checks both equalities; throws ConsistencyError
  /// if either fails.
  static TriadPair make(Triad a, Triad b, std::optional<ParamPoint> source = std::nullopt);

  const Triad& left() const { return left_; }
  const Triad& right() const { return right_; }
  const BigInt& sum4() const { return sum4_; }
  const BigInt& prod() const { return prod_; }
  /// gcd of all six entries is 1.
  bool primitive() const { return primitive_; }
  const std::optional<ParamPoint>& source() const { return source_; }
  TriadPair with_source(std::optional<ParamPoint> source) const;

  /// Identity and ordering ignore `source`: (sum4, left, right).
  friend bool operator==(const TriadPair& l, const TriadPair& r) {
    return l.left_ == r.left_ && l.right_ == r.right_;
  }
  friend std::strong_ordering operator<=>(const TriadPair& l, const TriadPair& r);

 private:
  TriadPair(Triad left, Triad right, BigInt sum4, BigInt prod, bool primitive, std::optional<ParamPoint> source)
      : left_(std::move(left)),
        right_(std::move(right)),
        sum4_(std::move(sum4)),
        prod_(std::move(prod)),
        primitive_(primitive),
        source_(std::move(source)) {}

  Triad left_, right_;
  BigInt sum4_, prod_;
  bool primitive_ = false;
  std::optional<ParamPoint> source_;
};

struct TriadCheck {
  bool sums_equal = false;
  bool products_equal = false;
  bool trivial = false;  // equal as multisets
  BigInt sum4_left, sum4_right;
  BigInt prod_left, prod_right;
  bool ok() const { return sums_equal && products_equal && !trivial; }
};

/// Fourth-power-level check of two arbitrary triads.
TriadCheck check_triads(const Triad& left, const Triad& right);

// --- construction steps ----------------------------------------------------

/// Trial substitution; the product equation holds identically.
/// Throws DomainError for zero p, q, or r.
SixRationals substitute_xy(const BigInt& p, const BigInt& q, const BigInt& r, const Rational& t, const Rational& u);

/// u = -2(tD - E)/(t^2 D - E). Throws DegenerateError when t^2 D - E = 0
/// or when the only root is the trivial u = 0.
Rational solve_u(const BigInt& p, const BigInt& q, const BigInt& r, const Rational& t);

/// Scaled solution at (p, q, r, t) multiplied by k, with all denominators
/// cleared: the returned values are the rational ones times the least L >= 1
/// making them integral, and the provenance records k * L.
/// Throws DomainError for zero p, q, r and DegenerateError when D = 0.
SolutionSix param_solution(const BigInt& p, const BigInt& q, const BigInt& r, const Rational& t,
                           const Rational& k = Rational(1));

SystemReport verify_system(const SolutionSix& s);

/// Throws DegenerateError naming the vanishing denominator factor.
Rational t_candidate_1(const BigInt& p, const BigInt& q, const BigInt& r);
Rational t_candidate_2(const BigInt& p, const BigInt& q, const BigInt& r);

/// p^3 - pq^2 + pqr - pr^2 + q^3 - r^3.
BigInt condition_value(const BigInt& p, const BigInt& q, const BigInt& r);

struct CubicPoint {
  BigInt p, q, r;
  /// Set when a coordinate is zero or p^4 = r^4; the quartics and the scaled
  /// solution need nonzero p, q, r and D != 0.
  std::optional<std::string> degenerate_reason;
};

CubicPoint parametrize_cubic(const ParamPoint& pt);

/// Throws DegenerateError for a = 0 or a = b.
Rational t_of_ab(const ParamPoint& pt);

struct FamilyResult {
  ParamPoint point;
  CubicPoint pqr;
  std::optional<Rational> t;            // absent when a = 0 or a = b
  SolutionSix squares;                  // x_i = X_i^2, y_i = Y_i^2
  std::array<BigInt, 3> root_x, root_y; // |X_i|, |Y_i|
  std::optional<std::string> degenerate_reason;  // some entry is zero
  bool trivial = false;
  std::optional<TriadPair> pair;        // present when no entry is zero
};

/// Evaluates the final two-parameter family at (a, b). Degenerate and trivial
/// outcomes are flagged, not thrown.
FamilyResult final_family(const ParamPoint& pt);

/// Absolute values, sorted triads, common gcd removed, smaller triad first.
/// Throws DegenerateError for a zero entry and ConsistencyError if the
/// normalized pair fails either equality.
TriadPair canonicalize(const std::array<BigInt, 3>& x, const std::array<BigInt, 3>& y,
                       std::optional<ParamPoint> source = std::nullopt);

bool is_trivial(const TriadPair& pair);

struct RangeSpec {
  BigInt a_min, a_max, b_min, b_max;
  std::optional<BigInt> max_element;
};

struct RangeReport {
  std::vector<TriadPair> pairs;  // canonical, deduplicated, sorted by (sum4, left, right)
  std::size_t points = 0;
  std::size_t degenerate = 0;    // a zero entry (b = 0 or b = 2a)
  std::size_t trivial = 0;
  std::size_t above_bound = 0;
};

/// Final family over a rectangular (a, b) grid. A pair reached from several
/// grid points keeps the first source in (a, b) order.
RangeReport generate_range(const RangeSpec& spec);

}  // namespace biquad
