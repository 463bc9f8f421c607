#include "lagint/simplicial.hpp"

#include <algorithm>
#include <numeric>

#include "lagint/finite_complex.hpp"

namespace lagint {

SimplicialModel SimplicialModel::build(size_t vertex_count,
                                       const std::vector<std::vector<int>>& simplices) {
  SimplicialModel out;
  out.vertices_ = vertex_count;
  std::map<int, std::vector<std::vector<int>>> by_dim;
  for (size_t v = 0; v < vertex_count; ++v)
    by_dim[0].push_back({static_cast<int>(v)});
  // close under faces
  std::vector<std::vector<int>> queue = simplices;
  while (!queue.empty()) {
    std::vector<int> s = queue.back();
    queue.pop_back();
    std::sort(s.begin(), s.end());
    if (std::unique(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("simplex with repeated vertices");
    for (int v : s)
      if (v < 0 || static_cast<size_t>(v) >= vertex_count)
        throw std::invalid_argument("simplex vertex out of range");
    int dim = static_cast<int>(s.size()) - 1;
    if (dim > 3) throw std::invalid_argument("simplices above dimension 3");
    if (dim <= 0) continue;
    auto& bucket = by_dim[dim];
    if (std::find(bucket.begin(), bucket.end(), s) == bucket.end()) {
      bucket.push_back(s);
      for (size_t skip = 0; skip < s.size(); ++skip) {
        std::vector<int> face;
        for (size_t i = 0; i < s.size(); ++i)
          if (i != skip) face.push_back(s[i]);
        queue.push_back(std::move(face));
      }
    }
  }
  for (auto& [dim, bucket] : by_dim) std::sort(bucket.begin(), bucket.end());
  out.by_dim_ = std::move(by_dim);
  return out;
}

int SimplicialModel::top_dimension() const {
  int top = 0;
  for (const auto& [dim, bucket] : by_dim_)
    if (!bucket.empty()) top = std::max(top, dim);
  return top;
}

const std::vector<std::vector<int>>& SimplicialModel::simplices_of_dim(int k) const {
  static const std::vector<std::vector<int>> kEmpty;
  auto it = by_dim_.find(k);
  return it == by_dim_.end() ? kEmpty : it->second;
}

long SimplicialModel::euler_characteristic() const {
  long chi = 0;
  for (const auto& [dim, bucket] : by_dim_)
    chi += (dim % 2 == 0 ? 1 : -1) * static_cast<long>(bucket.size());
  return chi;
}

MonodromyData MonodromyData::power(long k) const {
  MonodromyData out;
  out.order = order;
  for (const auto& [edge, e] : edge_exponent) {
    long v = (e * k) % static_cast<long>(order);
    if (v < 0) v += order;
    if (v != 0) out.edge_exponent[edge] = v;
  }
  return out;
}

unsigned MonodromyData::exact_order() const {
  long g = static_cast<long>(order);
  for (const auto& [edge, e] : edge_exponent) g = std::gcd(g, e);
  return order / static_cast<unsigned>(g == 0 ? order : g);
}

void check_cocycle(const SimplicialModel& model, const MonodromyData& monodromy) {
  long n = static_cast<long>(monodromy.order);
  for (const auto& tri : model.simplices_of_dim(2)) {
    long total = monodromy.exponent(tri[1], tri[2]) -
                 monodromy.exponent(tri[0], tri[2]) +
                 monodromy.exponent(tri[0], tri[1]);
    if (((total % n) + n) % n != 0)
      throw NotACocycle("monodromy product around 2-simplex (" +
                        std::to_string(tri[0]) + "," + std::to_string(tri[1]) + "," +
                        std::to_string(tri[2]) + ") is not 1");
  }
}

std::vector<size_t> twisted_cohomology(const SimplicialModel& model,
                                       const MonodromyData& monodromy) {
  check_cocycle(model, monodromy);
  const unsigned n = monodromy.order;
  int top = model.top_dimension();
  std::vector<size_t> dims;
  std::map<int, std::map<std::vector<int>, size_t>> index;
  for (int k = 0; k <= top; ++k) {
    const auto& simp = model.simplices_of_dim(k);
    for (size_t i = 0; i < simp.size(); ++i) index[k][simp[i]] = i;
    dims.push_back(simp.size());
  }
  FiniteComplex complex(0, dims);
  // (d phi)(v_0..v_{k+1}) = zeta^{x(v0,v1)} phi(v1..) + sum_{i>=1} (-1)^i phi(..no vi..)
  for (int k = 0; k < top; ++k) {
    auto& mat = complex.differential_from(k);
    const auto& targets = model.simplices_of_dim(k + 1);
    for (size_t row = 0; row < targets.size(); ++row) {
      const auto& s = targets[row];
      for (size_t skip = 0; skip < s.size(); ++skip) {
        std::vector<int> face;
        for (size_t i = 0; i < s.size(); ++i)
          if (i != skip) face.push_back(s[i]);
        auto it = index[k].find(face);
        if (it == index[k].end())
          throw std::invalid_argument("face missing from the simplicial model");
        Scalar c;
        if (skip == 0)
          c = Scalar::root_of_unity(n, monodromy.exponent(s[0], s[1]));
        else
          c = skip % 2 == 0 ? Scalar::one() : -Scalar::one();
        mat.add_to(row, it->second, c);
      }
    }
  }
  auto hom = complex.homology_dims();
  std::vector<size_t> out;
  for (int k = 0; k <= top; ++k) out.push_back(hom.at(k));
  return out;
}

CyclicCover cyclic_cover(const SimplicialModel& model, const MonodromyData& monodromy,
                         unsigned n) {
  check_cocycle(model, monodromy);
  unsigned exact = monodromy.exact_order();
  if (exact == 0 || n % exact != 0)
    throw OrderMismatch("monodromy has exact order " + std::to_string(exact) +
                        ", which does not divide " + std::to_string(n));
  // rescale exponents from Z/order to Z/n
  long reduce = static_cast<long>(monodromy.order / exact);
  long scale = static_cast<long>(n / exact);
  auto lift_exp = [&](int a, int b) {
    long e = monodromy.exponent(a, b);
    return ((e / reduce) * scale) % static_cast<long>(n);
  };
  CyclicCover out;
  auto vid = [&](int v, long sheet) {
    long s = ((sheet % static_cast<long>(n)) + n) % static_cast<long>(n);
    return static_cast<int>(v * static_cast<long>(n) + s);
  };
  size_t cover_vertices = model.vertex_count() * n;
  out.vertex_labels.resize(cover_vertices);
  for (size_t v = 0; v < model.vertex_count(); ++v)
    for (unsigned s = 0; s < n; ++s)
      out.vertex_labels[static_cast<size_t>(vid(static_cast<int>(v), s))] = {
          static_cast<int>(v), static_cast<int>(s)};
  std::vector<std::vector<int>> simplices;
  for (int k = 1; k <= model.top_dimension(); ++k) {
    for (const auto& s : model.simplices_of_dim(k)) {
      for (unsigned sheet = 0; sheet < n; ++sheet) {
        std::vector<int> lifted;
        lifted.push_back(vid(s[0], sheet));
        for (size_t i = 1; i < s.size(); ++i)
          lifted.push_back(vid(s[i], sheet + lift_exp(s[0], s[i])));
        simplices.push_back(std::move(lifted));
      }
    }
  }
  out.cover = SimplicialModel::build(cover_vertices, simplices);
  if (out.cover.euler_characteristic() !=
      static_cast<long>(n) * model.euler_characteristic())
    throw std::logic_error("cyclic cover: Euler characteristic mismatch");
  return out;
}

CoveringDecompositionReport covering_decomposition_check(const SimplicialModel& model,
                                                         const MonodromyData& monodromy,
                                                         unsigned n) {
  CoveringDecompositionReport report;
  CyclicCover cover = cyclic_cover(model, monodromy, n);
  MonodromyData trivial;
  trivial.order = monodromy.order;
  report.cover_dims = twisted_cohomology(cover.cover, trivial);
  size_t degrees = report.cover_dims.size();
  report.twisted_sums.assign(degrees, 0);
  for (unsigned k = 0; k < n; ++k) {
    auto dims = twisted_cohomology(model, monodromy.power(static_cast<long>(k)));
    dims.resize(degrees, 0);
    for (size_t q = 0; q < degrees; ++q) report.twisted_sums[q] += dims[q];
    report.twisted_dims.push_back(std::move(dims));
  }
  report.match = report.cover_dims == report.twisted_sums;
  return report;
}

} // namespace lagint
