#pragma once

#include <optional>
#include <stdexcept>

#include "lagint/poincare_series.hpp"
#include "lagint/polyring.hpp"

namespace lagint {

struct NotInIdeal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reduced Groebner basis: monic elements, none reducible by the others,
/// sorted by leading term in the basis order.
struct GroebnerBasis {
  MonomialOrder order = MonomialOrder::GradedLex;
  std::vector<Polynomial> elements;
};

/// Hilbert numerator N(t): the Hilbert series of the quotient ring equals
/// N(t) / prod_v (1 - t^{deg v}) over the ambient variables.
struct HilbertData {
  Poly1 numerator;
  std::vector<int> ambient_degrees;
};

/// Certificate for the Hilbert-numerator regularity criterion: a homogeneous
/// sequence is regular iff its ideal's numerator equals prod_i (1 - t^{deg g_i}).
struct RegularSequenceCertificate {
  bool regular = false;
  Poly1 actual_numerator;
  Poly1 expected_numerator;
};

/// Generators of a graded ideal with a write-once cached Groebner basis.
class IdealPresentation {
 public:
  IdealPresentation(const PolyRing& ring, std::vector<Polynomial> generators)
      : ring_(&ring), gens_(std::move(generators)) {}

  const PolyRing& ring() const { return *ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  /// Cached; the first call fixes the basis order for this presentation.
  const GroebnerBasis& groebner(MonomialOrder order = MonomialOrder::GradedLex) const;

 private:
  const PolyRing* ring_;
  std::vector<Polynomial> gens_;
  mutable std::optional<GroebnerBasis> cache_;
};

/// Buchberger with the normal selection strategy (lowest lcm degree first,
/// lexicographic tie-break); output is the reduced basis.
GroebnerBasis buchberger(const PolyRing& ring, const std::vector<Polynomial>& gens,
                         MonomialOrder order);

/// Remainder of multivariate division of f by gb; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Coefficients c with a = sum_j c_j * gens_j, recovered through a
/// representation-tracking Groebner run; the identity is re-expanded and
/// verified exactly before returning.  Throws NotInIdeal otherwise.
std::vector<Polynomial> lift_coefficients(const Polynomial& a,
                                          const std::vector<Polynomial>& gens);

/// Hilbert numerator of the quotient by a homogeneous ideal, computed from
/// the leading-term ideal of its Groebner basis.
HilbertData hilbert_series(const IdealPresentation& ideal,
                           MonomialOrder order = MonomialOrder::GradedLex);

RegularSequenceCertificate is_regular_sequence(const std::vector<Polynomial>& seq,
                                               const PolyRing& ring);

/// Hilbert function values of the quotient ring in degrees 0..max_degree.
std::vector<long> hilbert_function(const HilbertData& data, size_t max_degree);

/// All monomials of the given weighted internal degree.
std::vector<Monomial> monomials_of_degree(const PolyRing& ring, long degree);

/// Monomials of the given degree that no leading term of gb divides; these
/// form a vector-space basis of the quotient in that degree.
std::vector<Monomial> standard_monomials(const PolyRing& ring, const GroebnerBasis& gb,
                                         long degree);

/// Minimal homogeneous generating set extracted from a Groebner basis by
/// ascending degree.
std::vector<Polynomial> minimal_generators(const PolyRing& ring,
                                           const std::vector<Polynomial>& gens,
                                           MonomialOrder order = MonomialOrder::GradedLex);

} // namespace lagint
