#pragma once

// Sparse multivariate polynomials with exact integer coefficients.
//
// A MultiPoly carries its ordered variable list; arithmetic is only defined
// between polynomials over the same list. Terms are kept in a map ordered by
// total degree, then lexicographically by exponent vector, and zero
// coefficients are never stored, so two polynomials are equal iff their term
// maps are.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biquad/exact.hpp"

namespace biquad {

class MultiPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;

  struct TermOrder {
    bool operator()(const Exponents& lhs, const Exponents& rhs) const;
  };
  using TermMap = std::map<Exponents, BigInt, TermOrder>;

  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const BigInt& c);
  /// The polynomial consisting of a single variable. Throws DomainError if
  /// `name` is not in the list.
  static MultiPoly variable(std::vector<std::string> variables, std::string_view name);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  MultiPoly pow(unsigned exponent) const;
  /// Partial derivative with respect to `name`.
  MultiPoly derivative(std::string_view name) const;
  MultiPoly scaled(const BigInt& factor) const;

  /// Exact value at a point given in variable-list order. Throws DomainError
  /// when the point has the wrong length.
  Rational eval(std::span<const Rational> point) const;
  /// Same, by name; every variable must be assigned.
  Rational eval(const std::map<std::string, Rational>& assignment) const;

  /// Human-readable form, highest terms first, e.g. "3*a^2*b - b^3".
  std::string to_string() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator-(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator+(const MultiPoly& lhs, const BigInt& c);
  friend MultiPoly operator*(const BigInt& c, const MultiPoly& rhs) { return rhs.scaled(c); }

  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) = default;

 private:
  void require_same_variables(const MultiPoly& other) const;
  void accumulate(const Exponents& e, const BigInt& c);

  std::vector<std::string> vars_;
  TermMap terms_;
};

enum class ArithKind { add, sub, mul };

/// Expanded lhs (+|-|*) rhs. Throws DomainError on a variable-list mismatch.
MultiPoly poly_arith(const MultiPoly& lhs, const MultiPoly& rhs, ArithKind kind);

inline bool poly_is_zero(const MultiPoly& f) { return f.is_zero(); }

/// Helper for building polynomials in code: one MultiPoly per variable.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> variables) : vars_(std::move(variables)) {}
  MultiPoly var(std::string_view name) const { return MultiPoly::variable(vars_, name); }
  MultiPoly constant(const BigInt& c) const { return MultiPoly::constant(vars_, c); }
  MultiPoly zero() const { return MultiPoly(vars_); }
  const std::vector<std::string>& variables() const { return vars_; }

 private:
  std::vector<std::string> vars_;
};

}  // namespace biquad
