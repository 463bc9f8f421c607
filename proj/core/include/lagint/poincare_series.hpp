#pragma once

#include <string>
#include <vector>

#include "lagint/rationals.hpp"

namespace lagint {

/// Dense univariate polynomial with integer coefficients, constant term first.
class Poly1 {
 public:
  Poly1() : c_(1, Integer(0)) {}
  explicit Poly1(Integer constant) : c_(1, std::move(constant)) {}
  explicit Poly1(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly1 monomial(Integer coeff, size_t power);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }
  const Integer& coeff(size_t k) const {
    static const Integer kZero(0);
    return k < c_.size() ? c_[k] : kZero;
  }
  const std::vector<Integer>& coeffs() const { return c_; }

  Poly1 operator+(const Poly1& o) const;
  Poly1 operator-(const Poly1& o) const;
  Poly1 operator*(const Poly1& o) const;
  bool operator==(const Poly1& o) const { return c_ == o.c_; }
  bool operator!=(const Poly1& o) const { return !(*this == o); }

  /// Exact division; throws if the remainder is nonzero.
  Poly1 divide_exact(const Poly1& divisor) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim() {
    while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

/// Rational generating function N(t)/D(t) used for equivariant Poincare
/// bookkeeping.  Denominators are products of factors (1 - t^{2k}), so the
/// constant term of D is 1 and exact power-series expansion is an integer
/// recurrence.
class PoincareSeries {
 public:
  PoincareSeries() : num_(Integer(0)), den_(Integer(1)) {}
  PoincareSeries(Poly1 numerator, Poly1 denominator);

  static PoincareSeries constant(Integer value);
  /// 1 / (1 - t^2)^power
  static PoincareSeries inverse_one_minus_t2(unsigned power);

  const Poly1& numerator() const { return num_; }
  const Poly1& denominator() const { return den_; }

  PoincareSeries operator+(const PoincareSeries& o) const;
  PoincareSeries operator-(const PoincareSeries& o) const;
  PoincareSeries operator*(const PoincareSeries& o) const;
  PoincareSeries shifted(size_t t_power) const; // multiply by t^power
  bool equals(const PoincareSeries& o) const;   // as rational functions

  /// Cancel the GCD of numerator and denominator (normalized so that the
  /// denominator keeps constant term +1 when possible).
  PoincareSeries simplified() const;

  std::string to_string() const;

 private:
  Poly1 num_, den_;
};

/// Exact power-series expansion coefficients 0..N of p; requires a nonzero
/// constant term in the denominator.
std::vector<Rational> series_truncate(const PoincareSeries& p, size_t n);

} // namespace lagint
