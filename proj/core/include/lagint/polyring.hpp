#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lagint/cyclotomic.hpp"

namespace lagint {

/// A graded polynomial ring: named variables with positive internal degrees
/// and an optional torus multigrading (one weight vector in Z^r per variable).
struct PolyRing {
  std::vector<std::string> vars;
  std::vector<int> degrees;                // internal degrees, all >= 1
  std::vector<std::vector<int>> weights;   // empty, or one Z^r vector per var
  int torus_rank = 0;

  PolyRing() = default;
  PolyRing(std::vector<std::string> names, std::vector<int> internal_degrees,
           std::vector<std::vector<int>> torus_weights = {});

  size_t nvars() const { return vars.size(); }
  int var_index(const std::string& name) const;      // -1 when absent
  const std::vector<int>& weight(size_t v) const;

  bool operator==(const PolyRing& o) const {
    return vars == o.vars && degrees == o.degrees && weights == o.weights;
  }
};

using Monomial = std::vector<int>;

enum class MonomialOrder { Lex, GradedLex };

/// true when a < b in the given order (variables compared left to right).
bool monomial_less(const PolyRing& ring, MonomialOrder order, const Monomial& a,
                   const Monomial& b);
long monomial_degree(const PolyRing& ring, const Monomial& m);
std::vector<int> monomial_character(const PolyRing& ring, const Monomial& m);
bool monomial_divides(const Monomial& a, const Monomial& b);
Monomial monomial_quotient(const Monomial& b, const Monomial& a);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

/// Element of a PolyRing: finite term map with no explicit zero coefficients.
class Polynomial {
 public:
  Polynomial() : ring_(nullptr) {}
  explicit Polynomial(const PolyRing& ring) : ring_(&ring) {}
  static Polynomial constant(const PolyRing& ring, const Scalar& c);
  static Polynomial variable(const PolyRing& ring, size_t v);

  const PolyRing& ring() const { return *ring_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const Scalar& c);
  Scalar coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Scalar& c) const;
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Leading term with respect to `order`.
  std::pair<Monomial, Scalar> leading_term(MonomialOrder order) const;

  /// The common internal degree when homogeneous, otherwise nullopt.
  std::optional<long> homogeneous_degree() const;
  /// The common torus character when character-homogeneous.
  std::optional<std::vector<int>> homogeneous_character() const;

  Polynomial derivative(size_t var) const;
  /// Image under vars[i] -> images[i]; all images live in `target`.
  Polynomial substitute(const PolyRing& target,
                        const std::vector<Polynomial>& images) const;

  std::string to_string() const;

 private:
  const PolyRing* ring_;
  std::map<Monomial, Scalar> terms_;
};

/// Recursive-descent parser for polynomial expressions over `ring`:
/// rationals, variables, + - * ^ and parentheses.
Polynomial parse_polynomial(const PolyRing& ring, const std::string& text);

} // namespace lagint
