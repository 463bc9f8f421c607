#pragma once

#include <stdexcept>

#include "lagint/groebner.hpp"

namespace lagint {

struct NotRegular : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadLift : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Canonical basis word of a free graded-commutative extension: a square-free
/// ascending product of the degree -1 generators times a monomial in the
/// degree -2 generators (which commute).
struct DgWord {
  std::vector<int> odd;   // sorted indices into the odd generator list
  std::vector<int> even;  // exponent per even generator

  bool operator<(const DgWord& o) const {
    if (odd != o.odd) return odd < o.odd;
    return even < o.even;
  }
  bool operator==(const DgWord& o) const { return odd == o.odd && even == o.even; }
  int homological_degree() const {
    int e = 0;
    for (int x : even) e += x;
    return -static_cast<int>(odd.size()) - 2 * e;
  }
};

/// Element of the free extension: finite sum of words with polynomial
/// coefficients from the base ring.
class DgElement {
 public:
  DgElement() = default;
  explicit DgElement(const PolyRing& ring) : ring_(&ring) {}

  bool is_zero() const { return terms_.empty(); }
  const std::map<DgWord, Polynomial>& terms() const { return terms_; }
  void add_term(const DgWord& w, const Polynomial& coeff);

  DgElement operator+(const DgElement& o) const;
  DgElement operator-(const DgElement& o) const;
  DgElement operator*(const Polynomial& p) const;
  bool operator==(const DgElement& o) const { return terms_ == o.terms_; }

  std::string to_string(const std::vector<std::string>& odd_names,
                        const std::vector<std::string>& even_names) const;

 private:
  const PolyRing* ring_ = nullptr;
  std::map<DgWord, Polynomial> terms_;
};

/// Multiply two words; zero when an odd generator repeats.  The sign counts
/// the odd transpositions needed to sort the concatenation.
std::optional<std::pair<DgWord, int>> word_product(const DgWord& a, const DgWord& b,
                                                   size_t even_count);
DgElement element_product(const DgElement& a, const DgElement& b, size_t even_count);

struct DgGenerator {
  std::string name;
  int homological_degree; // -1 or -2
  long internal_degree;
  std::vector<int> character; // torus character; empty when ungraded
  DgElement differential;     // homological degree +1 image
};

/// Free graded-commutative extension of a polynomial ring by generators in
/// homological degrees -1 and -2 with an explicit differential.  d has
/// homological degree +1 and d о d = 0 is checked on every generator at
/// construction.
class DgAlgebraPresentation {
 public:
  DgAlgebraPresentation(const PolyRing& ring, std::vector<DgGenerator> odd,
                        std::vector<DgGenerator> even);

  const PolyRing& ring() const { return *ring_; }
  const std::vector<DgGenerator>& odd_generators() const { return odd_; }
  const std::vector<DgGenerator>& even_generators() const { return even_; }

  long word_internal_degree(const DgWord& w) const;
  std::vector<int> word_character(const DgWord& w) const;

  /// Graded Leibniz extension of the generator differentials.
  DgElement differential(const DgElement& element) const;
  DgElement differential_of_word(const DgWord& w) const;

  /// True when d о d vanishes on every generator (checked symbolically).
  bool d_squared_is_zero() const;

 private:
  const PolyRing* ring_;
  std::vector<DgGenerator> odd_, even_;
};

/// Koszul dg algebra on a certified regular sequence: one degree -1 generator
/// per element g, with d(e) = g and matching internal degree.
DgAlgebraPresentation koszul_dg(const std::vector<Polynomial>& gens,
                                const PolyRing& ring);

/// Tate extension encoding moment-map constraints: degree -1 generators for
/// the ideal sequence and for the moment sequence, and one degree -2
/// generator per moment element with d(eps_i) = sum_j c_ij e_j - f_i.
/// `lifts[i][j]` must satisfy moment_i = sum_j lifts[i][j] * ideal_j exactly.
DgAlgebraPresentation tate_moment_extension(
    const std::vector<Polynomial>& ideal_gens,
    const std::vector<Polynomial>& moment_gens,
    const std::vector<std::vector<Polynomial>>& lifts, const PolyRing& ring);

} // namespace lagint
