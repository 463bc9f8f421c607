#include "lagint/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace lagint {

namespace {

// Dense division of integer polynomials, used only with monic divisors.
// Returns the quotient; the remainder replaces `num`.
std::vector<Integer> divide_monic(std::vector<Integer>& num,
                                  const std::vector<Integer>& den) {
  std::vector<Integer> quot;
  if (num.size() < den.size()) return quot;
  quot.assign(num.size() - den.size() + 1, Integer(0));
  for (size_t k = num.size(); k-- >= den.size() && k + 1 >= den.size();) {
    if (k + 1 > num.size()) continue;
    Integer c = num[k];
    if (c == 0) {
      if (k + 1 == den.size()) break;
      continue;
    }
    size_t shift = k - (den.size() - 1);
    quot[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    if (k + 1 == den.size()) break;
  }
  while (num.size() > 1 && num.back() == 0) num.pop_back();
  return quot;
}

std::map<unsigned, std::vector<Integer>>& phi_cache() {
  static std::map<unsigned, std::vector<Integer>> cache;
  return cache;
}

std::mutex phi_mutex;

// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively.
std::vector<Integer> compute_phi(unsigned n) {
  if (n == 1) return {Integer(-1), Integer(1)};
  std::vector<Integer> num(n + 1, Integer(0));
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto phi_d = Scalar::cyclotomic_polynomial(d);
    num = divide_monic(num, phi_d);
  }
  return num;
}

} // namespace

const std::vector<Integer>& Scalar::cyclotomic_polynomial(unsigned n) {
  {
    std::lock_guard<std::mutex> lock(phi_mutex);
    auto it = phi_cache().find(n);
    if (it != phi_cache().end()) return it->second;
  }
  auto phi = compute_phi(n);
  std::lock_guard<std::mutex> lock(phi_mutex);
  return phi_cache().emplace(n, std::move(phi)).first->second;
}

Scalar Scalar::root_of_unity(unsigned n, long k) {
  if (n == 0) throw std::invalid_argument("root_of_unity: order must be >= 1");
  long r = k % static_cast<long>(n);
  if (r < 0) r += n;
  if (n == 1) return Scalar::one();
  const auto& phi = cyclotomic_polynomial(n);
  size_t deg = phi.size() - 1;
  // x^r reduced modulo Phi_n.
  std::vector<Rational> coeffs(deg, Rational(0));
  if (static_cast<size_t>(r) < deg) {
    coeffs[r] = 1;
  } else {
    std::vector<Rational> power(r + 1, Rational(0));
    power[r] = 1;
    // long division by the monic Phi_n over Q
    for (size_t t = power.size(); t-- >= phi.size() && t + 1 >= phi.size();) {
      Rational c = power[t];
      if (c != 0) {
        size_t shift = t - deg;
        for (size_t i = 0; i < phi.size(); ++i)
          power[shift + i] -= c * Rational(phi[i]);
      }
      if (t == deg) break;
    }
    for (size_t i = 0; i < deg; ++i) coeffs[i] = power[i];
  }
  Scalar out(n, std::move(coeffs));
  out.trim_to_field();
  return out;
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Scalar::rational_value() const {
  if (!is_rational()) throw std::logic_error("Scalar is not rational");
  return coeffs_[0];
}

void Scalar::trim_to_field() {
  if (order_ > 1 && is_rational()) {
    coeffs_.assign(1, coeffs_[0]);
    order_ = 1;
  }
}

void Scalar::promote(Scalar& a, Scalar& b) {
  if (a.order_ == b.order_) return;
  if (a.order_ == 1) {
    const auto& phi = cyclotomic_polynomial(b.order_);
    std::vector<Rational> c(phi.size() - 1, Rational(0));
    c[0] = a.coeffs_[0];
    a = Scalar(b.order_, std::move(c));
    return;
  }
  if (b.order_ == 1) {
    promote(b, a);
    return;
  }
  throw std::logic_error("Scalar arithmetic across distinct cyclotomic orders");
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Scalar Scalar::operator+(const Scalar& other) const {
  Scalar a = *this, b = other;
  promote(a, b);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  a.trim_to_field();
  return a;
}

Scalar Scalar::operator-(const Scalar& other) const { return *this + (-other); }

Scalar Scalar::operator*(const Scalar& other) const {
  Scalar a = *this, b = other;
  promote(a, b);
  if (a.order_ == 1) return Scalar(a.coeffs_[0] * b.coeffs_[0]);
  const auto& phi = cyclotomic_polynomial(a.order_);
  size_t deg = phi.size() - 1;
  std::vector<Rational> prod(2 * deg - 1, Rational(0));
  for (size_t i = 0; i < deg; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < deg; ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  for (size_t t = prod.size(); t-- > deg;) {
    Rational c = prod[t];
    if (c == 0) continue;
    size_t shift = t - deg;
    for (size_t i = 0; i < phi.size(); ++i)
      prod[shift + i] -= c * Rational(phi[i]);
  }
  prod.resize(deg);
  Scalar out(a.order_, std::move(prod));
  out.trim_to_field();
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  if (order_ == 1) return Scalar(Rational(1) / coeffs_[0]);
  // Extended Euclid in Q[x] for (this, Phi_n): u*this + v*Phi = gcd = const.
  const auto& phi_z = cyclotomic_polynomial(order_);
  std::vector<Rational> r0(phi_z.size());
  for (size_t i = 0; i < phi_z.size(); ++i) r0[i] = Rational(phi_z[i]);
  std::vector<Rational> r1 = coeffs_;
  while (r1.size() > 1 && r1.back() == 0) r1.pop_back();
  std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
  auto poly_deg = [](const std::vector<Rational>& p) {
    return static_cast<long>(p.size()) - 1;
  };
  while (poly_deg(r1) > 0 || r1[0] != 0) {
    if (poly_deg(r1) == 0) break;
    // divide r0 by r1
    std::vector<Rational> rem = r0;
    std::vector<Rational> quot(rem.size() > r1.size() ? rem.size() - r1.size() + 1 : 1,
                               Rational(0));
    while (rem.size() >= r1.size() && !(rem.size() == 1 && rem[0] == 0)) {
      if (rem.back() == 0) {
        rem.pop_back();
        if (rem.empty()) rem.push_back(Rational(0));
        continue;
      }
      size_t shift = rem.size() - r1.size();
      Rational c = rem.back() / r1.back();
      quot[shift] = c;
      for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
      while (rem.size() > 1 && rem.back() == 0) rem.pop_back();
      if (rem.size() < r1.size()) break;
    }
    // s_new = s0 - quot * s1
    std::vector<Rational> s_new(std::max(s0.size(), quot.size() + s1.size() - 1),
                                Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) s_new[i] = s0[i];
    for (size_t i = 0; i < quot.size(); ++i) {
      if (quot[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s_new[i + j] -= quot[i] * s1[j];
    }
    while (s_new.size() > 1 && s_new.back() == 0) s_new.pop_back();
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s_new);
    while (r1.size() > 1 && r1.back() == 0) r1.pop_back();
  }
  // r1 is a nonzero constant: inverse = s1 / r1[0]
  if (r1[0] == 0) throw std::domain_error("Scalar: not invertible mod Phi_n");
  const auto& phi = cyclotomic_polynomial(order_);
  std::vector<Rational> inv(phi.size() - 1, Rational(0));
  for (size_t i = 0; i < s1.size() && i < inv.size(); ++i) inv[i] = s1[i] / r1[0];
  Scalar out(order_, std::move(inv));
  out.trim_to_field();
  return out;
}

Scalar Scalar::operator/(const Scalar& other) const { return *this * other.inverse(); }

bool Scalar::operator==(const Scalar& other) const {
  Scalar a = *this, b = other;
  promote(a, b);
  return a.coeffs_ == b.coeffs_;
}

std::string Scalar::to_string() const {
  if (order_ == 1) return rational_to_string(coeffs_[0]);
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    out << rational_to_string(coeffs_[i]);
    if (i > 0) out << "*z" << order_ << "^" << i;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

} // namespace lagint
