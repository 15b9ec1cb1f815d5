#include "biquad/exact.hpp"

#include <limits>

#include "biquad/errors.hpp"

namespace biquad {

static_assert(sizeof(long) == sizeof(long long), "LP64 target required for BigInt(long long)");

BigInt::BigInt(long long v) : v_(static_cast<long>(v)) {}
BigInt::BigInt(unsigned long long v) : v_(static_cast<unsigned long>(v)) {}

BigInt BigInt::from_string(std::string_view text) {
  std::string s(text);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw DomainError("not an integer: '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') throw DomainError("not an integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(mpz_class(s, 10));
}

bool BigInt::fits_int64() const { return mpz_fits_slong_p(v_.get_mpz_t()) != 0; }

bool BigInt::fits_uint64() const { return sign() >= 0 && mpz_fits_ulong_p(v_.get_mpz_t()) != 0; }

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw DomainError("integer out of int64 range: " + to_string());
  return v_.get_si();
}

std::uint64_t BigInt::to_uint64() const {
  if (!fits_uint64()) throw DomainError("integer out of uint64 range: " + to_string());
  return v_.get_ui();
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

BigInt abs(const BigInt& v) { return BigInt(mpz_class(::abs(v.raw()))); }

BigInt gcd(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(::gcd(a.raw(), b.raw()))); }

BigInt pow(const BigInt& base, unsigned exponent) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.raw().get_mpz_t(), exponent);
  return BigInt(std::move(out));
}

BigInt divexact(const BigInt& n, const BigInt& divisor) {
  if (divisor.is_zero() || mpz_divisible_p(n.raw().get_mpz_t(), divisor.raw().get_mpz_t()) == 0) {
    throw ConsistencyError("divexact: " + divisor.to_string() + " does not divide " + n.to_string());
  }
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), n.raw().get_mpz_t(), divisor.raw().get_mpz_t());
  return BigInt(std::move(out));
}

SqrtResult integer_sqrt(const BigInt& n) {
  if (n.sign() < 0) throw DomainError("integer_sqrt of negative value " + n.to_string());
  mpz_class root;
  mpz_class rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.raw().get_mpz_t());
  const bool exact = sgn(rem) == 0;
  return {BigInt(std::move(root)), exact};
}

std::optional<BigInt> is_perfect_square(const BigInt& n) {
  if (n.sign() < 0) return std::nullopt;
  // Cheap residue filter before the full root.
  if (mpz_perfect_square_p(n.raw().get_mpz_t()) == 0) return std::nullopt;
  auto [root, exact] = integer_sqrt(n);
  if (!exact) throw ConsistencyError("square filter disagreed with sqrtrem for " + n.to_string());
  return root;
}

// ---------------------------------------------------------------------------

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw DomainError("rational with zero denominator");
  mpq_class q(num.raw(), den.raw());
  q.canonicalize();
  *this = from_mpq(q);
}

Rational Rational::from_mpq(const mpq_class& q) {
  return Rational(BigInt(mpz_class(q.get_num())), BigInt(mpz_class(q.get_den())), Reduced{});
}

Rational Rational::from_string(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::from_string(text));
  return Rational(BigInt::from_string(text.substr(0, slash)), BigInt::from_string(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

namespace {
mpq_class as_mpq(const Rational& r) {
  // Operands are already canonical, so no canonicalize() is needed here.
  mpq_class q;
  mpq_set_num(q.get_mpq_t(), r.num().raw().get_mpz_t());
  mpq_set_den(q.get_mpq_t(), r.den().raw().get_mpz_t());
  return q;
}
}  // namespace

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_integer() && b.is_integer()) return Rational(a.num_ + b.num_, BigInt(1), Rational::Reduced{});
  return Rational::from_mpq(mpq_class(as_mpq(a) + as_mpq(b)));
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.is_integer() && b.is_integer()) return Rational(a.num_ - b.num_, BigInt(1), Rational::Reduced{});
  return Rational::from_mpq(mpq_class(as_mpq(a) - as_mpq(b)));
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_integer() && b.is_integer()) return Rational(a.num_ * b.num_, BigInt(1), Rational::Reduced{});
  return Rational::from_mpq(mpq_class(as_mpq(a) * as_mpq(b)));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("rational division by zero");
  return Rational::from_mpq(mpq_class(as_mpq(a) / as_mpq(b)));
}

Rational Rational::operator-() const { return Rational(-num_, den_, Reduced{}); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

Rational pow(const Rational& base, unsigned exponent) {
  return Rational(pow(base.num(), exponent), pow(base.den(), exponent));
}

Rational abs(const Rational& v) { return v.sign() < 0 ? -v : v; }

std::optional<Rational> rational_sqrt(const Rational& x) {
  auto num_root = is_perfect_square(x.num());
  if (!num_root) return std::nullopt;
  auto den_root = is_perfect_square(x.den());
  if (!den_root) return std::nullopt;
  return Rational(*num_root, *den_root);
}

}  // namespace biquad
