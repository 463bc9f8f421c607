#pragma once

#include "lagint/derived_homology.hpp"

namespace lagint {

struct NotIsotropic : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WrongDimension : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotClosedForm : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonConstantMoment : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MomentMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IntersectionNotClean : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateHessian : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OddCanonicalCharacter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A cotangent symplectic model: 2n variables in Darboux pairs (z_i, w_i)
/// with omega = sum dz_i /\ dw_i.  Base and fiber variables of a pair share
/// the internal degree; when a torus acts, the fiber weight is the negative
/// of the base weight (the action is the induced one on covectors).
struct SymplecticModel {
  PolyRing ring;            // variables z_1..z_n, w_1..w_n
  size_t pairs = 0;
  std::vector<int> linearization; // character chi of the torus, may be empty

  size_t base_var(size_t i) const { return i; }
  size_t fiber_var(size_t i) const { return pairs + i; }
  int torus_rank() const { return ring.torus_rank; }
  /// deg z_i + deg w_i, required uniform across pairs.
  int symplectic_weight() const { return 2 * ring.degrees.at(0); }

  static SymplecticModel cotangent(const std::vector<std::string>& base_names,
                                   const std::vector<std::string>& fiber_names,
                                   const std::vector<int>& base_degrees,
                                   const std::vector<std::vector<int>>& base_weights,
                                   std::vector<int> linearization = {});

  /// Moment polynomial of the rho-th torus factor: sum_i a_{i,rho} z_i w_i.
  Polynomial moment_polynomial(size_t rho) const;
};

/// One of the supported Lagrangian shapes.
struct LagrangianDescriptor {
  enum class Kind { ZeroSection, Graph, Conormal, Linear };
  Kind kind = Kind::ZeroSection;
  // Graph of a closed 1-form: components eta_i (polynomials in the base
  // variables), or a potential whose differential supplies them.
  std::vector<Polynomial> graph_components;
  // Conormal of the coordinate subvariety {z_i = 0 : i in vanishing}.
  std::vector<size_t> conormal_vanishing;
  // Linear subspace spanned by rows (length 2n, exact rational entries).
  std::vector<std::vector<Rational>> linear_basis;

  static LagrangianDescriptor zero_section();
  static LagrangianDescriptor graph(std::vector<Polynomial> components);
  static LagrangianDescriptor graph_of_potential(const SymplecticModel& model,
                                                 const Polynomial& potential);
  static LagrangianDescriptor conormal(std::vector<size_t> vanishing);
  static LagrangianDescriptor linear(std::vector<std::vector<Rational>> basis);
};

/// Element of the bookkeeping group standing in for the equivariant Picard
/// group of an affine model: an internal-degree shift plus a torus character.
struct LineData {
  long degree = 0;
  std::vector<int> character;

  LineData() = default;
  LineData(long d, std::vector<int> chi) : degree(d), character(std::move(chi)) {}
  static LineData zero(int rank) { return LineData(0, std::vector<int>(rank, 0)); }
  LineData operator+(const LineData& o) const;
  LineData operator-() const;
  LineData scaled(int factor) const;
  bool is_zero() const;
  std::string to_string() const;
};

/// The smooth-chart data of a descriptor: coordinate names with grading, and
/// the restriction map from the ambient model variables.
struct Chart {
  PolyRing coords;                 // chart coordinate ring
  std::vector<Polynomial> images;  // one image per ambient variable
};

/// A validated pair of Lagrangians with its derived bookkeeping.
struct IntersectionScenario {
  const SymplecticModel* model = nullptr;
  LagrangianDescriptor first, second;
  Chart chart1, chart2;
  std::vector<Polynomial> ideal1, ideal2;   // ambient descriptor ideals
  std::vector<Polynomial> ideal_b;          // minimal generators of ideal1+ideal2
  std::vector<Rational> moment_level;

  size_t dim_b = 0;
  size_t excess_rank = 0;
  size_t codim_b_in_c2 = 0; // m in the (C1, C2) orientation
  size_t codim_b_in_c1 = 0;

  PolyRing b_ring;                          // polynomial ring on the B chart
  std::vector<FreeSummand> excess_cotangent; // generator data of E^dual (\cong Omega_B)
  LineData det_normal_c2, det_normal_c1;    // det N_{B/C2}, det N_{B/C1}
  LineData k_c1, k_c2, k_b;

  LineData twist1, twist2;                  // F_1, F_2 twist data
  bool half_canonical1 = false, half_canonical2 = false;

  std::vector<Polynomial> moment_gens;      // nonzero moment polynomials
  std::vector<size_t> moment_factors;       // torus factor of each moment generator
  std::vector<std::vector<Polynomial>> moment_lifts; // over ideal1

  bool proper_over_affine = false;          // user-supplied metadata flags
  bool finite_invariants = false;
};

/// Checks the isotropy, dimension, and (for graphs) closedness conditions.
void validate_lagrangian(const SymplecticModel& model, const LagrangianDescriptor& L);

/// The moment image of a validated invariant Lagrangian: one constant per
/// torus factor.  Throws NonConstantMoment when a moment polynomial does not
/// reduce to a constant modulo the descriptor ideal.
std::vector<Rational> moment_value(const SymplecticModel& model,
                                   const LagrangianDescriptor& L);

struct TwistRequest {
  enum class Kind { None, HalfCanonical, Explicit };
  Kind kind = Kind::None;
  LineData explicit_data;
};

IntersectionScenario build_scenario(const SymplecticModel& model,
                                    const LagrangianDescriptor& L1,
                                    const LagrangianDescriptor& L2,
                                    TwistRequest twist1 = {}, TwistRequest twist2 = {});

/// Closed-form Ext dims: for affine B only q = 0 contributes, so total degree
/// k + m carries the Hilbert function of wedge^k(excess) (x) det N_{B/C2}.
TotalDimsTable closed_form_ext_dims(const IntersectionScenario& s, const Window& window);

/// Hilbert function table of wedge^k of the dual excess module.
std::map<long, unsigned long> wedge_excess_prediction(const IntersectionScenario& s,
                                                      unsigned k, long d_max);

struct CanonicalCharCertificate {
  std::vector<std::pair<std::string, LineData>> summands;
  LineData total;
  bool holds = false;
  std::string to_string() const;
};

/// Character-level canonical identity: the data of K_{C1}^dual, K_{C2},
/// det(N_{B/C2})^2 and the symplectic weight correction sum to zero.
/// Throws CheckFailed when the cancellation fails.
CanonicalCharCertificate canonical_char_check(const IntersectionScenario& s);

struct HessianCertificate {
  size_t codim = 0;
  size_t rank = 0;
  LineData det_normal; // det N^dual data of the critical locus in the base
  std::vector<std::string> hessian_rows;
};

/// For a graph Lagrangian: full rank of the Hessian block on the normal
/// directions of the critical locus, certifying 2-torsion of det N_{Z/M}.
HessianCertificate hessian_torsion_check(const IntersectionScenario& s);

/// Equivariant Ext dims through the two-term wedge complex of the quotient
/// cotangent complex.  Requires torus weights; throws OddCanonicalCharacter
/// when a half-canonical twist has odd character data.
TotalDimsTable equivariant_ext_dims(const IntersectionScenario& s, const Window& window);

struct OracleComparison {
  std::string name;
  bool match = true;
  std::vector<std::string> mismatches;
};

struct OracleReport {
  std::vector<OracleComparison> comparisons;
  BigradedDimsTable derived_table;                 // brute-force Tor dims
  std::optional<BigradedDimsTable> moment_table;   // Tate model dims
  TotalDimsTable closed_form;                      // assembled Ext dims
  std::optional<TotalDimsTable> equivariant;       // equivariant assembly
  bool all_match() const {
    for (const auto& c : comparisons)
      if (!c.match) return false;
    return true;
  }
};

/// Runs every applicable dual-route comparison for the scenario.
OracleReport compare_with_oracle(const IntersectionScenario& s, const Window& window);

} // namespace lagint
