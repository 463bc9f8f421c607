#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "lagint/sparse_matrix.hpp"

namespace lagint {

struct NotAComplex : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite cochain complex: terms indexed by a contiguous degree range
/// [lowest_degree, lowest_degree + n], with differentials raising degree by
/// one.  diff(i) maps term i to term i+1, so it is a
/// (dim term_{i+1} x dim term_i) matrix.
class FiniteComplex {
 public:
  FiniteComplex(int lowest_degree, std::vector<size_t> term_dims)
      : lowest_(lowest_degree), dims_(std::move(term_dims)) {
    if (dims_.empty()) throw std::invalid_argument("empty complex");
    for (size_t i = 0; i + 1 < dims_.size(); ++i)
      diffs_.emplace_back(dims_[i + 1], dims_[i]);
  }

  int lowest_degree() const { return lowest_; }
  int highest_degree() const { return lowest_ + static_cast<int>(dims_.size()) - 1; }
  size_t term_dim(int degree) const { return dims_.at(index(degree)); }

  SparseMatrix& differential_from(int degree) { return diffs_.at(index(degree)); }
  const SparseMatrix& differential_from(int degree) const {
    return diffs_.at(index(degree));
  }

  /// d_{k+1} . d_k == 0 for all consecutive pairs.
  bool is_complex() const;

  /// dim ker(d_k) - rank(d_{k-1}) at each degree k.  Throws NotAComplex when
  /// some composite differential is nonzero.
  std::map<int, size_t> homology_dims() const;

 private:
  size_t index(int degree) const {
    if (degree < lowest_ || degree > highest_degree())
      throw std::out_of_range("degree outside complex");
    return static_cast<size_t>(degree - lowest_);
  }

  int lowest_;
  std::vector<size_t> dims_;
  std::vector<SparseMatrix> diffs_;
};

} // namespace lagint
