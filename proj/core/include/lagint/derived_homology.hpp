#pragma once

#include <optional>

#include "lagint/dg_algebra.hpp"
#include "lagint/tables.hpp"

namespace lagint {

struct MomentNotInIntersection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The coefficient ring of a block computation: a polynomial ring modulo a
/// homogeneous ideal, with normal forms and standard-monomial bases taken
/// from a fixed Groebner basis.
class QuotientRing {
 public:
  QuotientRing(const PolyRing& ring, const std::vector<Polynomial>& ideal_gens);

  const PolyRing& ring() const { return *ring_; }
  const GroebnerBasis& basis() const { return gb_; }
  Polynomial reduce(const Polynomial& p) const { return normal_form(p, gb_); }
  std::vector<Monomial> monomial_basis(long degree) const {
    return standard_monomials(*ring_, gb_, degree);
  }

 private:
  const PolyRing* ring_;
  GroebnerBasis gb_;
};

/// One free generator of a graded module or dg extension.
struct FreeSummand {
  long internal_degree = 0;
  std::vector<int> character; // empty when ungraded
};

/// Free dg extension data over a quotient ring: odd (degree -1) generators
/// have a ring-element image, even (degree -2) generators map into the span
/// of the odd ones.  This is the shape shared by Koszul complexes, Tate
/// moment models and two-term Sym predictions.
struct BlockComplexSpec {
  std::vector<FreeSummand> odd;
  std::vector<Polynomial> odd_image;                 // d(e_j), reduced mod the ideal
  std::vector<FreeSummand> even;
  std::vector<std::vector<Polynomial>> even_into_odd; // d(eps_i) = sum_j c[i][j] e_j

  /// Restrict to words with #odd + #even letters == weight (Sym^p piece).
  std::optional<unsigned> word_weight;
  /// Restrict basis elements to one torus character (weight-zero selection).
  std::optional<std::vector<int>> character_filter;
};

/// Blockwise homology of the extension over the quotient ring: one exact
/// finite-dimensional computation per (homological degree, internal degree)
/// pair inside the window.
BigradedDimsTable block_homology(const QuotientRing& base, const BlockComplexSpec& spec,
                                 const Window& window);

/// Homology of Koszul(i) tensored over the ambient ring with R/j, per
/// bidegree.  Requires the generators of i to be a certified regular
/// sequence; row k = 0 equals the Hilbert function of R/(i + j).
BigradedDimsTable derived_tensor_dims(const IdealPresentation& i,
                                      const IdealPresentation& j, const Window& window);

struct MomentModelData {
  std::vector<Polynomial> first_ideal;   // certified regular
  std::vector<Polynomial> second_ideal;
  std::vector<Polynomial> moment_gens;   // must lie in both ideals
  std::vector<std::vector<Polynomial>> lifts; // moment_i = sum_j lifts[i][j]*first[j]
};

/// Homology of the Tate moment model: R/I as a module over the Koszul
/// algebra on the moment generators, tensored with R/J.
BigradedDimsTable moment_tensor_dims(const PolyRing& ring, const MomentModelData& data,
                                     const Window& window,
                                     std::optional<std::vector<int>> character_filter =
                                         std::nullopt);

/// Homology dims of the weight-p piece of Sym applied to the shifted
/// two-term complex [sym_part -> wedge_part]: the degree -(p-j)-2j ... -p-j
/// pieces are wedge^{p-j}(wedge_part) (x) Sym^j(sym_part) with the
/// differential induced by `map_into_wedge`.
BigradedDimsTable sym_two_term_prediction(
    const QuotientRing& base, const std::vector<FreeSummand>& wedge_part,
    const std::vector<FreeSummand>& sym_part,
    const std::vector<std::vector<Polynomial>>& map_into_wedge, unsigned p,
    const Window& window);

/// Graded module given by generators and relations over a quotient ring.
struct GradedModulePresentation {
  std::vector<FreeSummand> generators;
  std::vector<std::vector<Polynomial>> relations; // each: one coefficient per generator
};

/// Hilbert function of the k-th exterior power of a presented module,
/// per internal degree 0..d_max.
std::map<long, unsigned long> wedge_power_hilbert(const QuotientRing& base,
                                                  const GradedModulePresentation& module,
                                                  unsigned k, long d_max);

} // namespace lagint
