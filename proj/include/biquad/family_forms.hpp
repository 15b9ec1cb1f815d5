#pragma once

// Closed forms of the construction, written once over a generic ring R.
//
// R is BigInt or Rational for numeric work and MultiPoly for the symbolic
// identity suite, so the identities check the same expressions that the
// numeric pipeline evaluates. R must support +, -, * and left
// multiplication by a BigInt constant.

#include <array>

#include "biquad/exact.hpp"

namespace biquad::forms {

template <class R>
R sq(const R& v) {
  return v * v;
}

template <class R>
R fourth(const R& v) {
  return sq(sq(v));
}

/// p^4 - r^4: the leading coefficient shared by all three brackets.
template <class R>
R coeff_d(const R& p, const R& r) {
  return fourth(p) - fourth(r);
}

/// p^4 - q^4.
template <class R>
R coeff_e(const R& p, const R& q) {
  return fourth(p) - fourth(q);
}

template <class R>
struct Six {
  std::array<R, 3> x;
  std::array<R, 3> y;
};

/// The trial substitution with free multiplier u. `one` is the ring's unit.
template <class R>
Six<R> substitution(const R& p, const R& q, const R& r, const R& t, const R& u, const R& one) {
  const R tu1 = t * u + one;
  const R u1 = u + one;
  return {{-(tu1 * sq(p)), u1 * sq(q), sq(r)}, {u1 * sq(p), sq(q), -(tu1 * sq(r))}};
}

/// Nonzero root of the sum-of-squares condition after substitution, as a
/// fraction num/den: u = -2(tD - E) / (t^2 D - E).
template <class R>
std::array<R, 2> solve_u_parts(const R& p, const R& q, const R& r, const R& t) {
  const R d = coeff_d(p, r);
  const R e = coeff_e(p, q);
  return {BigInt(-2) * (t * d - e), sq(t) * d - e};
}

/// The three brackets of the scaled solution, homogenized in t = tn/td so
/// that integer inputs give integer values (each is td^2 times the bracket).
template <class R>
std::array<R, 3> brackets(const R& p, const R& q, const R& r, const R& tn, const R& td) {
  const R d = coeff_d(p, r);
  const R e = coeff_e(p, q);
  const R tn2 = sq(tn);
  const R td2 = sq(td);
  const R tnd = tn * td;
  return {d * tn2 - BigInt(2) * e * tnd + e * td2,   // x1, y3
          d * tn2 - BigInt(2) * d * tnd + e * td2,   // x2, y1
          d * tn2 - e * td2};                        // x3, y2
}

/// Six values of the scaled two-parameter solution (k multiplies all six).
template <class R>
Six<R> scaled_solution(const R& p, const R& q, const R& r, const R& tn, const R& td, const R& k) {
  const auto b = brackets(p, q, r, tn, td);
  const R p2k = sq(p) * k;
  const R q2k = sq(q) * k;
  const R r2k = sq(r) * k;
  return {{b[0] * p2k, b[1] * q2k, b[2] * r2k}, {b[1] * p2k, b[2] * q2k, b[0] * r2k}};
}

/// A t value that puts a point on one of the quartics, as
/// (num_a * num_b) / (den_a * den_b).
template <class R>
struct CandidateParts {
  R num_a;
  R num_b;
  R den_a;  // p^2 - r^2
  R den_b;  // degree-4 bracket
};

template <class R>
CandidateParts<R> t_candidate_1_parts(const R& p, const R& q, const R& r) {
  const R p2 = sq(p), q2 = sq(q), r2 = sq(r);
  const R pq = p * q;
  const R num_b = fourth(p) + BigInt(2) * p2 * pq - BigInt(2) * p2 * r2 - BigInt(2) * pq * q2 -
                  BigInt(4) * pq * r2 + fourth(q) + BigInt(2) * q2 * r2 + BigInt(2) * fourth(r);
  const R den_b = fourth(p) + BigInt(2) * p2 * pq - BigInt(2) * p2 * r2 + BigInt(2) * pq * q2 + fourth(q) -
                  BigInt(2) * q2 * r2 - BigInt(2) * fourth(r);
  return {p2 + q2, num_b, p2 - r2, den_b};
}

template <class R>
CandidateParts<R> t_candidate_2_parts(const R& p, const R& q, const R& r) {
  const R p2 = sq(p), q2 = sq(q), r2 = sq(r);
  const R pr = p * r;
  const R num_b = fourth(p) - BigInt(2) * p2 * pr - BigInt(2) * p2 * q2 + BigInt(4) * q2 * pr +
                  BigInt(2) * pr * r2 + BigInt(2) * fourth(q) + BigInt(2) * q2 * r2 + fourth(r);
  const R den_b = fourth(p) - BigInt(2) * p2 * pr - BigInt(2) * p2 * q2 - BigInt(2) * pr * r2 -
                  BigInt(2) * fourth(q) - BigInt(2) * q2 * r2 + fourth(r);
  return {p2 + q2, num_b, p2 - r2, den_b};
}

/// The cubic whose vanishing makes the two t values coincide.
template <class R>
R condition_cubic(const R& p, const R& q, const R& r) {
  return p * p * p - p * q * q + p * q * r - p * r * r + q * q * q - r * r * r;
}

/// All five factors of the compatibility condition, cubic last.
template <class R>
std::array<R, 5> condition_factors(const R& p, const R& q, const R& r) {
  return {q + r, sq(p) + sq(q), sq(q) + sq(r), sq(p) + p * q - p * r + sq(q) - q * r + sq(r),
          condition_cubic(p, q, r)};
}

/// Rational parametrization of the cubic through lines via (-1, -1, 1).
template <class R>
std::array<R, 3> parametrize(const R& a, const R& b) {
  const R a2 = sq(a), b2 = sq(b);
  const R a3 = a2 * a, b3 = b2 * b;
  return {BigInt(2) * a3 - BigInt(3) * a2 * b + BigInt(3) * a * b2 - b3,
          -a3 + BigInt(3) * a2 * b - BigInt(2) * a * b2 + b3,
          a3 - a * b2 + b3};
}

/// Common t value on the parametrized cubic, as num / (den_a * den_b * den_c).
template <class R>
struct TOfAbParts {
  R num;
  R den_a;  // a
  R den_b;  // a - b
  R den_c;  // 5a^2 - 5ab + 2b^2
};

template <class R>
TOfAbParts<R> t_of_ab_parts(const R& a, const R& b) {
  const R a2 = sq(a), b2 = sq(b);
  const R num = -(BigInt(5) * fourth(a) - BigInt(8) * a2 * a * b + BigInt(8) * a2 * b2 - BigInt(4) * a * b2 * b + fourth(b));
  return {num, a, a - b, BigInt(5) * a2 - BigInt(5) * a * b + BigInt(2) * b2};
}

/// Polynomial factors of the square roots of the final family.
template <class R>
struct RootFactors {
  R f_2a_b;    // 2a - b
  R f_quad1;   // a^2 - ab + b^2
  R f_cub7;    // 5a^3 - 7a^2 b + 4ab^2 - b^3
  R f_cub3;    // a^3 - 3a^2 b + 2ab^2 - b^3
  R f_cub8;    // 5a^3 - 8a^2 b + 5ab^2 - b^3
  R f_cubr;    // a^3 - ab^2 + b^3
  R f_quad3;   // 3a^2 - 3ab + b^2
  R f_b;       // b
};

template <class R>
RootFactors<R> root_factors(const R& a, const R& b) {
  const R a2 = sq(a), b2 = sq(b);
  const R a3 = a2 * a, b3 = b2 * b;
  return {BigInt(2) * a - b,
          a2 - a * b + b2,
          BigInt(5) * a3 - BigInt(7) * a2 * b + BigInt(4) * a * b2 - b3,
          a3 - BigInt(3) * a2 * b + BigInt(2) * a * b2 - b3,
          BigInt(5) * a3 - BigInt(8) * a2 * b + BigInt(5) * a * b2 - b3,
          a3 - a * b2 + b3,
          BigInt(3) * a2 - BigInt(3) * a * b + b2,
          b};
}

/// Signed square roots X1..X3, Y1..Y3 of the final family.
template <class R>
Six<R> final_roots(const R& a, const R& b) {
  const auto f = root_factors(a, b);
  return {{f.f_2a_b * f.f_quad1 * f.f_cub7, f.f_cub3 * f.f_cub8, f.f_cubr * f.f_quad3 * f.f_b},
          {f.f_2a_b * f.f_quad1 * f.f_cub8, f.f_cub3 * f.f_quad3 * f.f_b, f.f_cubr * f.f_cub7}};
}

}  // namespace biquad::forms
