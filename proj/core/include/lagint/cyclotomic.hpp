#pragma once

#include <vector>

#include "lagint/rationals.hpp"

namespace lagint {

/// Exact element of Q or of a cyclotomic extension Q(zeta_n), stored as a
/// coefficient tuple in the power basis 1, zeta, ..., zeta^{phi(n)-1} modulo
/// the n-th cyclotomic polynomial.  Arithmetic never rounds; zeta^n == 1
/// holds identically.  Elements of different nontrivial orders do not mix;
/// plain rationals (order 1) promote into any extension.
class Scalar {
 public:
  Scalar() : order_(1), coeffs_(1, Rational(0)) {}
  explicit Scalar(const Rational& q) : order_(1), coeffs_(1, q) {}
  explicit Scalar(long n) : order_(1), coeffs_(1, Rational(n)) {}

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(Rational(1)); }
  /// zeta_n^k as an element of Q(zeta_n).
  static Scalar root_of_unity(unsigned n, long k);

  unsigned order() const { return order_; }
  bool is_zero() const;
  bool is_rational() const;
  /// The rational value; requires is_rational().
  Rational rational_value() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  Scalar operator/(const Scalar& other) const;
  Scalar inverse() const;
  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  std::string to_string() const;

  /// Coefficients of the n-th cyclotomic polynomial, constant term first.
  static const std::vector<Integer>& cyclotomic_polynomial(unsigned n);

 private:
  Scalar(unsigned order, std::vector<Rational> coeffs)
      : order_(order), coeffs_(std::move(coeffs)) {}
  static void promote(Scalar& a, Scalar& b);
  void trim_to_field();

  unsigned order_;
  std::vector<Rational> coeffs_;
};

} // namespace lagint
