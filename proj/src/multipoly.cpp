#include "biquad/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "biquad/errors.hpp"

namespace biquad {

namespace {

std::uint64_t degree_of(const MultiPoly::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

}  // namespace

bool MultiPoly::TermOrder::operator()(const Exponents& lhs, const Exponents& rhs) const {
  const auto dl = degree_of(lhs);
  const auto dr = degree_of(rhs);
  if (dl != dr) return dl < dr;
  return lhs < rhs;
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = i + 1; j < vars_.size(); ++j) {
      if (vars_[i] == vars_[j]) throw DomainError("duplicate variable '" + vars_[i] + "'");
    }
  }
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const BigInt& c) {
  MultiPoly out(std::move(variables));
  out.accumulate(Exponents(out.vars_.size(), 0), c);
  return out;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::string_view name) {
  MultiPoly out(std::move(variables));
  auto it = std::find(out.vars_.begin(), out.vars_.end(), name);
  if (it == out.vars_.end()) throw DomainError("unknown variable '" + std::string(name) + "'");
  Exponents e(out.vars_.size(), 0);
  e[static_cast<std::size_t>(it - out.vars_.begin())] = 1;
  out.accumulate(e, BigInt(1));
  return out;
}

void MultiPoly::require_same_variables(const MultiPoly& other) const {
  if (vars_ != other.vars_) throw DomainError("polynomials over different variable lists");
}

void MultiPoly::accumulate(const Exponents& e, const BigInt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.rbegin()->first));
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return degree_of(terms_.begin()->first) == degree_of(terms_.rbegin()->first);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
  return out;
}

MultiPoly operator+(const MultiPoly& lhs, const MultiPoly& rhs) {
  lhs.require_same_variables(rhs);
  MultiPoly out = lhs;
  for (const auto& [e, c] : rhs.terms_) out.accumulate(e, c);
  return out;
}

MultiPoly operator-(const MultiPoly& lhs, const MultiPoly& rhs) {
  lhs.require_same_variables(rhs);
  MultiPoly out = lhs;
  for (const auto& [e, c] : rhs.terms_) out.accumulate(e, -c);
  return out;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  lhs.require_same_variables(rhs);
  MultiPoly out(lhs.vars_);
  const std::size_t n = lhs.vars_.size();
  MultiPoly::Exponents e(n);
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = el[i] + er[i];
      out.accumulate(e, cl * cr);
    }
  }
  return out;
}

MultiPoly operator+(const MultiPoly& lhs, const BigInt& c) {
  MultiPoly out = lhs;
  out.accumulate(MultiPoly::Exponents(lhs.vars_.size(), 0), c);
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(vars_, BigInt(1));
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::string_view name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw DomainError("unknown variable '" + std::string(name) + "'");
  const auto i = static_cast<std::size_t>(it - vars_.begin());
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents lowered = e;
    --lowered[i];
    out.accumulate(lowered, c * BigInt(e[i]));
  }
  return out;
}

MultiPoly MultiPoly::scaled(const BigInt& factor) const {
  MultiPoly out(vars_);
  if (factor.is_zero()) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, c * factor);
  return out;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) {
    throw DomainError("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                      std::to_string(vars_.size()));
  }
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= biquad::pow(point[i], e[i]);
    }
    total += term;
  }
  return total;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& assignment) const {
  std::vector<Rational> point;
  point.reserve(vars_.size());
  for (const auto& v : vars_) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw DomainError("no value assigned to variable '" + v + "'");
    point.push_back(it->second);
  }
  return eval(point);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c.sign() < 0;
    const BigInt magnitude = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    bool wrote = false;
    const bool is_constant = degree_of(e) == 0;
    if (magnitude != BigInt(1) || is_constant) {
      os << magnitude;
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << vars_[i];
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly poly_arith(const MultiPoly& lhs, const MultiPoly& rhs, ArithKind kind) {
  switch (kind) {
    case ArithKind::add:
      return lhs + rhs;
    case ArithKind::sub:
      return lhs - rhs;
    case ArithKind::mul:
      return lhs * rhs;
  }
  throw DomainError("unknown arithmetic kind");
}

}  // namespace biquad
