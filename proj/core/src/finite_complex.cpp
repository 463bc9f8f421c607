#include "lagint/finite_complex.hpp"

namespace lagint {

bool FiniteComplex::is_complex() const {
  for (size_t i = 0; i + 1 < diffs_.size(); ++i)
    if (!(diffs_[i + 1] * diffs_[i]).is_zero()) return false;
  return true;
}

std::map<int, size_t> FiniteComplex::homology_dims() const {
  if (!is_complex()) throw NotAComplex("d o d != 0");
  std::map<int, size_t> out;
  for (size_t i = 0; i < dims_.size(); ++i) {
    int degree = lowest_ + static_cast<int>(i);
    size_t cycles =
        (i < diffs_.size()) ? diffs_[i].kernel_dim() : dims_[i];
    size_t boundaries = (i > 0) ? diffs_[i - 1].rank() : 0;
    out[degree] = cycles - boundaries;
  }
  return out;
}

} // namespace lagint
