#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "lagint/cyclotomic.hpp"

namespace lagint {

struct NotACocycle : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OrderMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite ordered simplicial complex with simplices up to dimension 3.
/// Construction closes the simplex list under faces; vertex lists are kept
/// sorted, which fixes all incidence signs.
class SimplicialModel {
 public:
  static SimplicialModel build(size_t vertex_count,
                               const std::vector<std::vector<int>>& simplices);

  size_t vertex_count() const { return vertices_; }
  int top_dimension() const;
  const std::vector<std::vector<int>>& simplices_of_dim(int k) const;
  long euler_characteristic() const;

 private:
  size_t vertices_ = 0;
  std::map<int, std::vector<std::vector<int>>> by_dim_;
};

/// Rank-1 local system of order n: an n-th root of unity on every edge,
/// stored by exponent.  The product around every 2-simplex boundary is 1.
struct MonodromyData {
  unsigned order = 1;
  std::map<std::pair<int, int>, long> edge_exponent; // keyed by (a < b)

  long exponent(int a, int b) const {
    auto it = edge_exponent.find({a, b});
    return it == edge_exponent.end() ? 0 : it->second;
  }
  /// k-th tensor power (exponents scaled mod the order).
  MonodromyData power(long k) const;
  /// Smallest n' dividing `order` such that all exponents lie in (order/n')Z.
  unsigned exact_order() const;
};

/// Verifies the cocycle condition; throws NotACocycle on failure.
void check_cocycle(const SimplicialModel& model, const MonodromyData& monodromy);

/// Dims of the cochain complex with the differential twisted by the edge
/// monodromies, over Q(zeta_n), per degree 0..top dimension.
std::vector<size_t> twisted_cohomology(const SimplicialModel& model,
                                       const MonodromyData& monodromy);

struct CyclicCover {
  SimplicialModel cover;
  std::vector<std::pair<int, int>> vertex_labels; // (base vertex, deck sheet)
};

/// n-fold cyclic cover determined by the monodromy; the projection is
/// simplicial and chi(cover) = n * chi(base).  Throws OrderMismatch when the
/// exact monodromy order does not divide n.
CyclicCover cyclic_cover(const SimplicialModel& model, const MonodromyData& monodromy,
                         unsigned n);

struct CoveringDecompositionReport {
  std::vector<size_t> cover_dims;
  std::vector<std::vector<size_t>> twisted_dims; // one row per power 0..n-1
  std::vector<size_t> twisted_sums;
  bool match = false;
};

/// Degree-by-degree check that H(cover) decomposes as the sum of the twisted
/// cohomologies of all monodromy powers.
CoveringDecompositionReport covering_decomposition_check(const SimplicialModel& model,
                                                         const MonodromyData& monodromy,
                                                         unsigned n);

} // namespace lagint
