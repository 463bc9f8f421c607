#include "lagint/sparse_matrix.hpp"

#include <stdexcept>

namespace lagint {

void SparseMatrix::set(size_t r, size_t c, const Scalar& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrix::set");
  if (value.is_zero())
    entries_.erase({r, c});
  else
    entries_[{r, c}] = value;
}

void SparseMatrix::add_to(size_t r, size_t c, const Scalar& value) {
  set(r, c, get(r, c) + value);
}

Scalar SparseMatrix::get(size_t r, size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Scalar::zero() : it->second;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
  SparseMatrix out(rows_, other.cols_);
  for (const auto& [rc, v] : entries_) {
    auto [r, k] = rc;
    // row k of `other`
    auto it = other.entries_.lower_bound({k, 0});
    for (; it != other.entries_.end() && it->first.first == k; ++it)
      out.add_to(r, it->first.second, v * it->second);
  }
  return out;
}

namespace {

using Row = std::map<size_t, Scalar>;

std::vector<Row> to_rows(const std::map<std::pair<size_t, size_t>, Scalar>& e,
                         size_t rows) {
  std::vector<Row> out(rows);
  for (const auto& [rc, v] : e) out[rc.first][rc.second] = v;
  return out;
}

// row_a -= factor * row_b
void axpy(Row& a, const Scalar& factor, const Row& b) {
  for (const auto& [c, v] : b) {
    auto it = a.find(c);
    if (it == a.end()) {
      Scalar nv = -(factor * v);
      if (!nv.is_zero()) a.emplace(c, std::move(nv));
    } else {
      it->second = it->second - factor * v;
      if (it->second.is_zero()) a.erase(it);
    }
  }
}

} // namespace

size_t SparseMatrix::rank() const {
  auto rows = to_rows(entries_, rows_);
  size_t rank = 0;
  std::vector<bool> used(rows_, false);
  for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
    size_t pivot = rows_;
    for (size_t r = 0; r < rows_; ++r) {
      if (used[r]) continue;
      auto it = rows[r].begin();
      if (it != rows[r].end() && it->first == col) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows_) continue;
    used[pivot] = true;
    ++rank;
    Scalar inv = rows[pivot].begin()->second.inverse();
    for (size_t r = 0; r < rows_; ++r) {
      if (used[r] || rows[r].empty()) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      axpy(rows[r], it->second * inv, rows[pivot]);
    }
  }
  return rank;
}

std::optional<std::vector<Scalar>> SparseMatrix::solve(
    const std::vector<Scalar>& rhs) const {
  if (rhs.size() != rows_) throw std::invalid_argument("solve: rhs size");
  auto rows = to_rows(entries_, rows_);
  std::vector<Scalar> b = rhs;
  std::vector<std::pair<size_t, size_t>> pivots; // (row, col)
  std::vector<bool> used(rows_, false);
  for (size_t col = 0; col < cols_; ++col) {
    size_t pivot = rows_;
    for (size_t r = 0; r < rows_; ++r) {
      if (used[r]) continue;
      auto it = rows[r].begin();
      if (it != rows[r].end() && it->first == col) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows_) continue;
    used[pivot] = true;
    pivots.emplace_back(pivot, col);
    Scalar inv = rows[pivot].begin()->second.inverse();
    for (size_t r = 0; r < rows_; ++r) {
      if (r == pivot || rows[r].empty()) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      Scalar f = it->second * inv;
      axpy(rows[r], f, rows[pivot]);
      b[r] = b[r] - f * b[pivot];
    }
  }
  for (size_t r = 0; r < rows_; ++r)
    if (!used[r] && rows[r].empty() && !b[r].is_zero()) return std::nullopt;
  for (size_t r = 0; r < rows_; ++r)
    if (!used[r] && !rows[r].empty())
      throw std::logic_error("solve: unreduced row"); // unreachable
  std::vector<Scalar> x(cols_, Scalar::zero());
  for (auto [r, c] : pivots) {
    // row r: pivot at c plus entries in free columns (set to zero)
    Scalar acc = b[r];
    Scalar diag = rows[r].at(c);
    x[c] = acc / diag;
  }
  // Back-substitute free-column contributions: free vars are zero, but pivot
  // rows may still reference later pivot columns; eliminate those.
  for (size_t i = pivots.size(); i-- > 0;) {
    auto [r, c] = pivots[i];
    Scalar acc = b[r];
    for (const auto& [cc, v] : rows[r]) {
      if (cc == c) continue;
      acc = acc - v * x[cc];
    }
    x[c] = acc / rows[r].at(c);
  }
  return x;
}

} // namespace lagint
