#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lagint/cyclotomic.hpp"

namespace lagint {

/// Sparse matrix over Q or Q(zeta_n); explicitly stored entries are nonzero.
/// Acts on column vectors: an (r x c) matrix maps a c-dimensional space to an
/// r-dimensional one.
class SparseMatrix {
 public:
  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  void set(size_t r, size_t c, const Scalar& value);
  void add_to(size_t r, size_t c, const Scalar& value);
  Scalar get(size_t r, size_t c) const;
  const std::map<std::pair<size_t, size_t>, Scalar>& entries() const {
    return entries_;
  }
  bool is_zero() const { return entries_.empty(); }

  SparseMatrix operator*(const SparseMatrix& other) const;

  /// Rank over the fraction field.  Gaussian elimination with the
  /// deterministic pivoting contract: the pivot is the first nonzero entry in
  /// row-major order among the remaining rows/columns.
  size_t rank() const;
  size_t kernel_dim() const { return cols_ - rank(); }

  /// One exact solution of A x = b, or nullopt when inconsistent.
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& rhs) const;

 private:
  size_t rows_, cols_;
  std::map<std::pair<size_t, size_t>, Scalar> entries_;
};

} // namespace lagint
