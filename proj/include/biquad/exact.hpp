#pragma once

// Exact integer and rational arithmetic. Both types are immutable values
// backed by GMP; every Rational is kept in lowest terms with a positive
// denominator, so equality is structural.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace biquad {

class BigInt {
 public:
  BigInt() = default;
  BigInt(int v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  BigInt(long v) : v_(v) {}                    // NOLINT(google-explicit-constructor)
  BigInt(unsigned v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)
  BigInt(long long v);                         // NOLINT(google-explicit-constructor)
  BigInt(unsigned long v) : v_(v) {}           // NOLINT(google-explicit-constructor)
  BigInt(unsigned long long v);                // NOLINT(google-explicit-constructor)
  explicit BigInt(mpz_class v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal integer. Throws DomainError.
  static BigInt from_string(std::string_view text);
  std::string to_string() const { return v_.get_str(10); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }

  bool fits_int64() const;
  bool fits_uint64() const;
  std::int64_t to_int64() const;    // throws DomainError if out of range
  std::uint64_t to_uint64() const;  // throws DomainError if out of range

  const mpz_class& raw() const { return v_; }

  friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ + b.v_)); }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ - b.v_)); }
  friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ * b.v_)); }
  BigInt operator-() const { return BigInt(mpz_class(-v_)); }
  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

BigInt abs(const BigInt& v);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned exponent);
/// Exact division; throws ConsistencyError if `divisor` does not divide `n`.
BigInt divexact(const BigInt& n, const BigInt& divisor);

struct SqrtResult {
  BigInt root;
  bool exact = false;
};

/// floor(sqrt(n)) and whether it is exact. Throws DomainError for n < 0.
SqrtResult integer_sqrt(const BigInt& n);

/// Nonnegative root when n is a perfect square (0 included); empty otherwise.
std::optional<BigInt> is_perfect_square(const BigInt& n);

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}                  // NOLINT(google-explicit-constructor)
  Rational(long v) : num_(v), den_(1) {}                 // NOLINT(google-explicit-constructor)
  Rational(long long v) : num_(v), den_(1) {}            // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : num_(v), den_(1) {}        // NOLINT(google-explicit-constructor)
  /// Reduces to lowest terms; throws DomainError when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "n" or "n/d" (d may be negative; result is normalized).
  static Rational from_string(std::string_view text);
  std::string to_string() const;

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt(1); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws DomainError on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Reduced {};
  Rational(BigInt num, BigInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  static Rational from_mpq(const mpq_class& q);

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

Rational pow(const Rational& base, unsigned exponent);
Rational abs(const Rational& v);

/// Nonnegative y with y*y == x when numerator and denominator are both
/// perfect squares; empty otherwise (including every negative x).
std::optional<Rational> rational_sqrt(const Rational& x);

}  // namespace biquad
