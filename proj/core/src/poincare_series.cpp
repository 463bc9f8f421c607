#include "lagint/poincare_series.hpp"

#include <sstream>
#include <stdexcept>

namespace lagint {

Poly1 Poly1::monomial(Integer coeff, size_t power) {
  std::vector<Integer> c(power + 1, Integer(0));
  c[power] = std::move(coeff);
  return Poly1(std::move(c));
}

Poly1 Poly1::operator+(const Poly1& o) const {
  std::vector<Integer> c(std::max(c_.size(), o.c_.size()), Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return Poly1(std::move(c));
}

Poly1 Poly1::operator-(const Poly1& o) const {
  std::vector<Integer> c(std::max(c_.size(), o.c_.size()), Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return Poly1(std::move(c));
}

Poly1 Poly1::operator*(const Poly1& o) const {
  if (is_zero() || o.is_zero()) return Poly1();
  std::vector<Integer> c(c_.size() + o.c_.size() - 1, Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return Poly1(std::move(c));
}

Poly1 Poly1::divide_exact(const Poly1& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("Poly1: division by zero");
  std::vector<Rational> rem(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) rem[i] = Rational(c_[i]);
  std::vector<Rational> quot(
      c_.size() >= divisor.c_.size() ? c_.size() - divisor.c_.size() + 1 : 1,
      Rational(0));
  Rational lead(divisor.c_.back());
  while (rem.size() >= divisor.c_.size()) {
    if (rem.back() == 0) {
      rem.pop_back();
      if (rem.empty()) break;
      continue;
    }
    size_t shift = rem.size() - divisor.c_.size();
    Rational q = rem.back() / lead;
    quot[shift] = q;
    for (size_t i = 0; i < divisor.c_.size(); ++i)
      rem[shift + i] -= q * Rational(divisor.c_[i]);
    while (rem.size() > 1 && rem.back() == 0) rem.pop_back();
    if (rem.size() == 1 && rem[0] == 0) break;
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("Poly1: inexact division");
  std::vector<Integer> out(quot.size());
  for (size_t i = 0; i < quot.size(); ++i) {
    if (denominator(quot[i]) != 1)
      throw std::domain_error("Poly1: quotient not integral");
    out[i] = numerator(quot[i]);
  }
  return Poly1(std::move(out));
}

std::string Poly1::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Integer a = c_[i];
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    Integer mag = abs(a);
    if (mag != 1 || i == 0) out << mag.str();
    if (i >= 1) {
      out << var;
      if (i >= 2) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

PoincareSeries::PoincareSeries(Poly1 numerator, Poly1 denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
}

PoincareSeries PoincareSeries::constant(Integer value) {
  return PoincareSeries(Poly1(std::move(value)), Poly1(Integer(1)));
}

PoincareSeries PoincareSeries::inverse_one_minus_t2(unsigned power) {
  Poly1 den(Integer(1));
  Poly1 factor(std::vector<Integer>{Integer(1), Integer(0), Integer(-1)});
  for (unsigned i = 0; i < power; ++i) den = den * factor;
  return PoincareSeries(Poly1(Integer(1)), den);
}

PoincareSeries PoincareSeries::operator+(const PoincareSeries& o) const {
  return PoincareSeries(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

PoincareSeries PoincareSeries::operator-(const PoincareSeries& o) const {
  return PoincareSeries(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

PoincareSeries PoincareSeries::operator*(const PoincareSeries& o) const {
  return PoincareSeries(num_ * o.num_, den_ * o.den_);
}

PoincareSeries PoincareSeries::shifted(size_t t_power) const {
  return PoincareSeries(num_ * Poly1::monomial(Integer(1), t_power), den_);
}

bool PoincareSeries::equals(const PoincareSeries& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

namespace {

// Monic GCD over Q, returned as a primitive integer polynomial.
Poly1 poly_gcd(const Poly1& a, const Poly1& b) {
  std::vector<Rational> r0(a.coeffs().size()), r1(b.coeffs().size());
  for (size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(a.coeffs()[i]);
  for (size_t i = 0; i < r1.size(); ++i) r1[i] = Rational(b.coeffs()[i]);
  auto is_zero = [](const std::vector<Rational>& p) {
    return p.size() == 1 && p[0] == 0;
  };
  auto trim = [](std::vector<Rational>& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
  };
  trim(r0);
  trim(r1);
  while (!is_zero(r1)) {
    // r0 mod r1
    while (r0.size() >= r1.size() && !is_zero(r0)) {
      size_t shift = r0.size() - r1.size();
      Rational q = r0.back() / r1.back();
      for (size_t i = 0; i < r1.size(); ++i) r0[shift + i] -= q * r1[i];
      trim(r0);
      if (r0.size() < r1.size()) break;
    }
    std::swap(r0, r1);
    trim(r1);
  }
  // clear denominators and content
  Integer lcm_den(1);
  for (const auto& c : r0) lcm_den = lcm(lcm_den, denominator(c));
  std::vector<Integer> out(r0.size());
  for (size_t i = 0; i < r0.size(); ++i)
    out[i] = numerator(r0[i] * Rational(lcm_den));
  Integer content(0);
  for (const auto& c : out) content = gcd(content, c);
  if (content == 0) content = 1;
  for (auto& c : out) c /= content;
  if (!out.empty() && out.back() < 0)
    for (auto& c : out) c = -c;
  return Poly1(std::move(out));
}

} // namespace

PoincareSeries PoincareSeries::simplified() const {
  if (num_.is_zero()) return PoincareSeries(Poly1(), Poly1(Integer(1)));
  Poly1 g = poly_gcd(num_, den_);
  Poly1 n = num_.divide_exact(g);
  Poly1 d = den_.divide_exact(g);
  if (d.coeff(0) < 0) {
    n = Poly1(Integer(0)) - n;
    d = Poly1(Integer(0)) - d;
  }
  return PoincareSeries(std::move(n), std::move(d));
}

std::string PoincareSeries::to_string() const {
  PoincareSeries s = simplified();
  if (s.den_ == Poly1(Integer(1))) return s.num_.to_string();
  return "(" + s.num_.to_string() + ") / (" + s.den_.to_string() + ")";
}

std::vector<Rational> series_truncate(const PoincareSeries& p, size_t n) {
  const auto& den = p.denominator();
  if (den.coeff(0) == 0)
    throw std::domain_error("series_truncate: denominator has zero constant term");
  Rational d0(den.coeff(0));
  std::vector<Rational> out(n + 1, Rational(0));
  for (size_t k = 0; k <= n; ++k) {
    Rational acc(p.numerator().coeff(k));
    for (size_t j = 1; j <= k; ++j)
      acc -= Rational(den.coeff(j)) * out[k - j];
    out[k] = acc / d0;
  }
  return out;
}

} // namespace lagint
