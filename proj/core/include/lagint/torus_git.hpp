#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lagint/poincare_series.hpp"

namespace lagint {

struct CertificateFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A linear torus action: one weight vector per coordinate plus a
/// linearization character.
struct TorusRepresentation {
  int rank = 1;
  std::vector<std::vector<int>> weights;
  std::vector<int> linearization;
  std::vector<std::string> names; // coordinate names for locus descriptions

  size_t coords() const { return weights.size(); }
  std::string coordinate_name(size_t i) const {
    return i < names.size() ? names[i] : "z" + std::to_string(i + 1);
  }
  /// The induced action on the cotangent model: weights followed by their
  /// negatives, coordinates named w_i.
  TorusRepresentation cotangent_lift() const;
};

/// Exact nearest point of the polyhedral cone {x : <w_i, x> >= 0} to the
/// target, found by enumerating KKT-consistent active sets (desk scale).
std::vector<Rational> cone_projection(const std::vector<Rational>& target,
                                      const std::vector<std::vector<int>>& cone_normals);

/// The optimal destabilizer of points with the given support: the projection
/// of -chi onto the support cone.  Zero iff such points are semistable.
std::vector<Rational> optimal_destabilizer(const TorusRepresentation& rep,
                                           const std::vector<size_t>& support);

struct SemistableLocus {
  std::vector<std::vector<size_t>> minimal_supports;
  std::string description;
  bool everything_semistable = false;
};

SemistableLocus semistable_locus(const TorusRepresentation& rep);

struct HKKNStratum {
  std::vector<Integer> beta_primitive;   // canonical primitive representative
  std::vector<Rational> beta;            // the projection output
  std::vector<size_t> fixed_indices;     // coordinates paired to zero by beta
  size_t codim = 0;                      // r_beta: strictly negative pairings
  std::vector<std::vector<size_t>> supports; // unstable supports owning this beta
};

/// Finite stratification of the unstable supports by optimal destabilizer,
/// sorted by primitive representative.
std::vector<HKKNStratum> hkkn_stratification(const TorusRepresentation& rep);

/// Equivariant Poincare series of a stratum: the series of the beta-fixed
/// subspace stratified recursively with the residual character chi + beta.
PoincareSeries stratum_poincare_series(const TorusRepresentation& rep,
                                       const HKKNStratum& stratum);

struct MorseReport {
  PoincareSeries total;    // 1/(1-t^2)^rank
  PoincareSeries residual; // solved P(M^ss)
  std::vector<Rational> residual_coefficients; // truncated to the requested degree
  bool residual_nonnegative = false;
  bool identity_holds = false; // truncated identity recomputed both ways
};

/// Truncated Morse equality P(M) = P(M^ss) + sum_beta t^{2 r_beta} P(S_beta).
MorseReport morse_equality_check(const TorusRepresentation& rep, size_t truncation);

struct AtiyahBottCertificate {
  std::vector<std::pair<size_t, Rational>> normal_pairings; // (coordinate, <w_i, beta>)
  bool ok = false;
};

/// Strict negativity of every normal pairing of a stratum, certifying
/// Euler-class injectivity and twisted Kirwan surjectivity through it.
/// Throws CertificateFailed when a normal pairing is not negative.
AtiyahBottCertificate atiyah_bott_certificate(const TorusRepresentation& rep,
                                              const HKKNStratum& stratum);

} // namespace lagint
