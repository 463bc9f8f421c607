#include "lagint/derived_homology.hpp"

#include <algorithm>

#include "lagint/finite_complex.hpp"

namespace lagint {

QuotientRing::QuotientRing(const PolyRing& ring, const std::vector<Polynomial>& ideal_gens)
    : ring_(&ring), gb_(buchberger(ring, ideal_gens, MonomialOrder::GradedLex)) {}

namespace {

struct Word {
  std::vector<int> odd;   // ascending indices
  std::vector<int> even;  // exponents
  bool operator<(const Word& o) const {
    if (odd != o.odd) return odd < o.odd;
    return even < o.even;
  }
};

int word_hom_degree(const Word& w) {
  int e = 0;
  for (int x : w.even) e += x;
  return -static_cast<int>(w.odd.size()) - 2 * e;
}

unsigned word_weight(const Word& w) {
  unsigned e = 0;
  for (int x : w.even) e += static_cast<unsigned>(x);
  return static_cast<unsigned>(w.odd.size()) + e;
}

long word_internal_degree(const BlockComplexSpec& spec, const Word& w) {
  long d = 0;
  for (int i : w.odd) d += spec.odd[static_cast<size_t>(i)].internal_degree;
  for (size_t i = 0; i < w.even.size(); ++i)
    d += static_cast<long>(w.even[i]) * spec.even[i].internal_degree;
  return d;
}

std::vector<int> word_character(const BlockComplexSpec& spec, const Word& w, int rank) {
  std::vector<int> chi(rank, 0);
  auto acc = [&](const std::vector<int>& c, int mult) {
    for (int r = 0; r < rank && r < static_cast<int>(c.size()); ++r)
      chi[static_cast<size_t>(r)] += mult * c[static_cast<size_t>(r)];
  };
  for (int i : w.odd) acc(spec.odd[static_cast<size_t>(i)].character, 1);
  for (size_t i = 0; i < w.even.size(); ++i) acc(spec.even[i].character, w.even[i]);
  return chi;
}

// All words with homological degree in [h_min, 0] and internal degree within
// d_max, optionally of fixed total letter count.
std::vector<Word> enumerate_words(const BlockComplexSpec& spec, int h_min, long d_max) {
  std::vector<Word> out;
  size_t n_odd = spec.odd.size(), n_even = spec.even.size();
  std::vector<int> even(n_even, 0);
  // enumerate even exponent tuples by total hom weight
  std::vector<std::vector<int>> even_tuples;
  std::vector<int> cur(n_even, 0);
  std::function<void(size_t, int)> rec = [&](size_t idx, int budget) {
    if (idx == n_even) {
      even_tuples.push_back(cur);
      return;
    }
    for (int e = 0; 2 * e <= budget; ++e) {
      cur[idx] = e;
      rec(idx + 1, budget - 2 * e);
    }
    cur[idx] = 0;
  };
  rec(0, -h_min);
  for (unsigned long mask = 0; mask < (1ul << n_odd); ++mask) {
    Word w;
    for (size_t i = 0; i < n_odd; ++i)
      if (mask & (1ul << i)) w.odd.push_back(static_cast<int>(i));
    for (const auto& tuple : even_tuples) {
      w.even = tuple;
      if (word_hom_degree(w) < h_min - 0) continue;
      if (word_internal_degree(spec, w) > d_max) continue;
      if (spec.word_weight && word_weight(w) != *spec.word_weight) continue;
      out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct DiffTerm {
  Word word;
  Polynomial coeff; // over the ambient ring, not yet reduced
};

// Symbolic differential of a word: Leibniz over the letters.
std::vector<DiffTerm> word_differential(const PolyRing& ring, const BlockComplexSpec& spec,
                                        const Word& w) {
  std::vector<DiffTerm> out;
  // odd letters: d(e_{s1}..e_{sk}) = sum_t (-1)^{t-1} image_{st} * rest
  for (size_t t = 0; t < w.odd.size(); ++t) {
    Word rest = w;
    rest.odd.erase(rest.odd.begin() + static_cast<long>(t));
    Polynomial c = spec.odd_image[static_cast<size_t>(w.odd[t])];
    if (t % 2 == 1) c = -c;
    if (!c.is_zero()) out.push_back({std::move(rest), std::move(c)});
  }
  // even letters: (-1)^{|odd|} * sum_l a_l * (sum_j c_lj e_j) * eps^{a - delta_l}
  int odd_sign = w.odd.size() % 2 == 0 ? 1 : -1;
  for (size_t l = 0; l < w.even.size(); ++l) {
    if (w.even[l] == 0) continue;
    for (size_t j = 0; j < spec.odd.size(); ++j) {
      const Polynomial& c = spec.even_into_odd[l][j];
      if (c.is_zero()) continue;
      // insert e_j into the odd word
      bool repeated = false;
      int crossings = 0;
      for (int s : w.odd) {
        if (s == static_cast<int>(j)) repeated = true;
        if (s > static_cast<int>(j)) ++crossings;
      }
      if (repeated) continue;
      Word target = w;
      target.even[l] -= 1;
      target.odd.push_back(static_cast<int>(j));
      std::sort(target.odd.begin(), target.odd.end());
      int sign = odd_sign * (crossings % 2 == 0 ? 1 : -1);
      Polynomial coeff = c * Scalar(static_cast<long>(w.even[l]));
      if (sign < 0) coeff = -coeff;
      out.push_back({std::move(target), std::move(coeff)});
    }
  }
  return out;
}

} // namespace

BigradedDimsTable block_homology(const QuotientRing& base, const BlockComplexSpec& spec,
                                 const Window& window) {
  const PolyRing& ring = base.ring();
  const int h_min = window.homological_min;
  const long d_max = window.internal_max;
  auto words = enumerate_words(spec, h_min - 1, d_max);
  // group words by homological degree
  std::map<int, std::vector<size_t>> words_by_degree;
  for (size_t i = 0; i < words.size(); ++i)
    words_by_degree[word_hom_degree(words[i])].push_back(i);
  // precompute symbolic differentials
  std::vector<std::vector<DiffTerm>> diffs(words.size());
  std::map<Word, size_t> word_index;
  for (size_t i = 0; i < words.size(); ++i) word_index[words[i]] = i;
  for (size_t i = 0; i < words.size(); ++i)
    diffs[i] = word_differential(ring, spec, words[i]);

  const int rank = ring.torus_rank;
  BigradedDimsTable table;
  table.k_min = h_min;
  table.d_max = d_max;
  for (long d = 0; d <= d_max; ++d) {
    // bases per homological degree
    std::map<int, std::vector<std::pair<size_t, Monomial>>> bases;
    for (int h = h_min - 1; h <= 0; ++h) {
      auto it = words_by_degree.find(h);
      if (it == words_by_degree.end()) continue;
      for (size_t wi : it->second) {
        long wdeg = word_internal_degree(spec, words[wi]);
        if (wdeg > d) continue;
        for (auto& m : base.monomial_basis(d - wdeg)) {
          if (spec.character_filter) {
            auto chi = word_character(spec, words[wi], rank);
            auto mc = monomial_character(ring, m);
            for (int r = 0; r < rank; ++r) chi[static_cast<size_t>(r)] += mc[static_cast<size_t>(r)];
            if (chi != *spec.character_filter) continue;
          }
          bases[h].emplace_back(wi, m);
        }
      }
    }
    std::map<int, std::map<std::pair<size_t, Monomial>, size_t>> index;
    for (auto& [h, basis] : bases) {
      std::sort(basis.begin(), basis.end());
      for (size_t i = 0; i < basis.size(); ++i) index[h][basis[i]] = i;
    }
    std::vector<size_t> dims;
    for (int h = h_min - 1; h <= 0; ++h)
      dims.push_back(bases.count(h) ? bases[h].size() : 0);
    FiniteComplex complex(h_min - 1, dims);
    for (int h = h_min - 1; h < 0; ++h) {
      if (!bases.count(h) || !bases.count(h + 1)) continue;
      auto& mat = complex.differential_from(h);
      const auto& basis = bases[h];
      for (size_t col = 0; col < basis.size(); ++col) {
        const auto& [wi, m] = basis[col];
        for (const auto& term : diffs[wi]) {
          Polynomial moved(ring);
          moved.add_term(m, Scalar::one());
          Polynomial value = base.reduce(term.coeff * moved);
          auto target_it = word_index.find(term.word);
          if (target_it == word_index.end()) continue;
          size_t ti = target_it->second;
          for (const auto& [mono, c] : value.terms()) {
            auto row_it = index[h + 1].find({ti, mono});
            if (row_it == index[h + 1].end()) continue;
            mat.add_to(row_it->second, col, c);
          }
        }
      }
    }
    auto hom = complex.homology_dims();
    for (int h = h_min; h <= 0; ++h) {
      auto it = hom.find(h);
      if (it != hom.end() && it->second != 0)
        table.set(h, d, static_cast<unsigned long>(it->second));
    }
  }
  return table;
}

BigradedDimsTable derived_tensor_dims(const IdealPresentation& i,
                                      const IdealPresentation& j, const Window& window) {
  const PolyRing& ring = i.ring();
  auto cert = is_regular_sequence(i.generators(), ring);
  if (!cert.regular)
    throw NotRegular("derived_tensor_dims: first ideal is not presented by a "
                     "regular sequence");
  QuotientRing base(ring, j.generators());
  BlockComplexSpec spec;
  for (const auto& g : i.generators()) {
    FreeSummand s;
    s.internal_degree = g.homogeneous_degree().value();
    if (auto chi = g.homogeneous_character()) s.character = *chi;
    spec.odd.push_back(std::move(s));
    spec.odd_image.push_back(base.reduce(g));
  }
  return block_homology(base, spec, window);
}

BigradedDimsTable moment_tensor_dims(const PolyRing& ring, const MomentModelData& data,
                                     const Window& window,
                                     std::optional<std::vector<int>> character_filter) {
  auto cert = is_regular_sequence(data.first_ideal, ring);
  if (!cert.regular) throw NotRegular("moment_tensor_dims: ideal not regular");
  // verify the lift identity exactly
  if (data.lifts.size() != data.moment_gens.size())
    throw BadLift("moment_tensor_dims: lift row count");
  for (size_t i = 0; i < data.moment_gens.size(); ++i) {
    Polynomial expanded(ring);
    if (data.lifts[i].size() != data.first_ideal.size())
      throw BadLift("moment_tensor_dims: lift column count");
    for (size_t j = 0; j < data.first_ideal.size(); ++j)
      expanded = expanded + data.lifts[i][j] * data.first_ideal[j];
    if (expanded != data.moment_gens[i])
      throw BadLift("moment_tensor_dims: lift identity fails");
  }
  // moment generators must lie in both ideals
  GroebnerBasis gb_i = buchberger(ring, data.first_ideal, MonomialOrder::GradedLex);
  GroebnerBasis gb_j = buchberger(ring, data.second_ideal, MonomialOrder::GradedLex);
  for (const auto& a : data.moment_gens)
    if (!normal_form(a, gb_i).is_zero() || !normal_form(a, gb_j).is_zero())
      throw MomentNotInIntersection("moment generator " + a.to_string() +
                                    " is not in the intersection ideal");

  QuotientRing base(ring, data.second_ideal);
  BlockComplexSpec spec;
  for (const auto& g : data.first_ideal) {
    FreeSummand s;
    s.internal_degree = g.homogeneous_degree().value();
    if (auto chi = g.homogeneous_character()) s.character = *chi;
    spec.odd.push_back(std::move(s));
    spec.odd_image.push_back(base.reduce(g));
  }
  for (size_t i = 0; i < data.moment_gens.size(); ++i) {
    FreeSummand s;
    s.internal_degree = data.moment_gens[i].homogeneous_degree().value();
    if (auto chi = data.moment_gens[i].homogeneous_character()) s.character = *chi;
    spec.even.push_back(std::move(s));
    std::vector<Polynomial> row;
    for (const auto& c : data.lifts[i]) row.push_back(base.reduce(c));
    spec.even_into_odd.push_back(std::move(row));
  }
  spec.character_filter = std::move(character_filter);
  return block_homology(base, spec, window);
}

BigradedDimsTable sym_two_term_prediction(
    const QuotientRing& base, const std::vector<FreeSummand>& wedge_part,
    const std::vector<FreeSummand>& sym_part,
    const std::vector<std::vector<Polynomial>>& map_into_wedge, unsigned p,
    const Window& window) {
  BlockComplexSpec spec;
  spec.odd = wedge_part;
  for (size_t j = 0; j < wedge_part.size(); ++j)
    spec.odd_image.push_back(Polynomial(base.ring())); // wedge generators are cycles
  spec.even = sym_part;
  for (size_t i = 0; i < sym_part.size(); ++i) {
    std::vector<Polynomial> row;
    for (size_t j = 0; j < wedge_part.size(); ++j)
      row.push_back(base.reduce(map_into_wedge.at(i).at(j)));
    spec.even_into_odd.push_back(std::move(row));
  }
  spec.word_weight = p;
  return block_homology(base, spec, window);
}

std::map<long, unsigned long> wedge_power_hilbert(const QuotientRing& base,
                                                  const GradedModulePresentation& module,
                                                  unsigned k, long d_max) {
  std::map<long, unsigned long> out;
  const PolyRing& ring = base.ring();
  size_t n = module.generators.size();
  if (k > n) return out;
  // k-subsets of generators
  std::vector<std::vector<size_t>> subsets;
  std::vector<size_t> cur;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (cur.size() == k) {
      subsets.push_back(cur);
      return;
    }
    for (size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  auto subset_degree = [&](const std::vector<size_t>& t) {
    long d = 0;
    for (size_t i : t) d += module.generators[i].internal_degree;
    return d;
  };
  if (module.relations.empty()) {
    for (long d = 0; d <= d_max; ++d) {
      unsigned long total = 0;
      for (const auto& t : subsets) {
        long rest = d - subset_degree(t);
        if (rest < 0) continue;
        total += base.monomial_basis(rest).size();
      }
      if (total) out[d] = total;
    }
    return out;
  }
  // presentation of wedge^k: relations r (x) wedge^{k-1} generators
  std::vector<std::vector<size_t>> sub_km1;
  cur.clear();
  std::function<void(size_t)> rec2 = [&](size_t start) {
    if (cur.size() == k - 1) {
      sub_km1.push_back(cur);
      return;
    }
    for (size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec2(i + 1);
      cur.pop_back();
    }
  };
  if (k >= 1) rec2(0);
  std::map<std::vector<size_t>, size_t> subset_index;
  for (size_t i = 0; i < subsets.size(); ++i) subset_index[subsets[i]] = i;
  for (long d = 0; d <= d_max; ++d) {
    // target basis: (subset, standard monomial)
    std::vector<std::pair<size_t, Monomial>> basis;
    std::map<std::pair<size_t, Monomial>, size_t> index;
    for (size_t si = 0; si < subsets.size(); ++si) {
      long rest = d - subset_degree(subsets[si]);
      if (rest < 0) continue;
      for (auto& m : base.monomial_basis(rest)) basis.emplace_back(si, m);
    }
    std::sort(basis.begin(), basis.end());
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    // spanning set of the image
    std::vector<std::map<size_t, Scalar>> image_rows;
    for (const auto& rel : module.relations) {
      // degree of the relation as an element of the free module
      std::optional<long> rel_deg;
      for (size_t g = 0; g < n; ++g) {
        if (rel[g].is_zero()) continue;
        long dg = rel[g].homogeneous_degree().value() +
                  module.generators[g].internal_degree;
        if (!rel_deg)
          rel_deg = dg;
        else if (*rel_deg != dg)
          throw std::invalid_argument("inhomogeneous module relation");
      }
      if (!rel_deg) continue;
      for (const auto& t : sub_km1) {
        long base_deg = *rel_deg;
        for (size_t i : t) base_deg += module.generators[i].internal_degree;
        long rest = d - base_deg;
        if (rest < 0) continue;
        for (auto& m : monomials_of_degree(ring, rest)) {
          std::map<size_t, Scalar> row;
          // expand m * (rel wedge e_t)
          for (size_t g = 0; g < n; ++g) {
            if (rel[g].is_zero()) continue;
            if (std::find(t.begin(), t.end(), g) != t.end()) continue;
            std::vector<size_t> target{g};
            target.insert(target.end(), t.begin(), t.end());
            int crossings = 0;
            for (size_t i : t)
              if (i < g) ++crossings;
            std::sort(target.begin(), target.end());
            int sign = crossings % 2 == 0 ? 1 : -1;
            Polynomial mono(ring);
            mono.add_term(m, sign > 0 ? Scalar::one() : -Scalar::one());
            Polynomial value = base.reduce(rel[g] * mono);
            size_t si = subset_index.at(target);
            for (const auto& [mm, cc] : value.terms()) {
              auto it = index.find({si, mm});
              if (it == index.end()) continue;
              auto rit = row.find(it->second);
              if (rit == row.end())
                row.emplace(it->second, cc);
              else {
                rit->second = rit->second + cc;
                if (rit->second.is_zero()) row.erase(rit);
              }
            }
          }
          if (!row.empty()) image_rows.push_back(std::move(row));
        }
      }
    }
    SparseMatrix image(image_rows.size(), basis.size());
    for (size_t r = 0; r < image_rows.size(); ++r)
      for (const auto& [c, v] : image_rows[r]) image.set(r, c, v);
    unsigned long dim = basis.size() - image.rank();
    if (dim) out[d] = dim;
  }
  return out;
}

} // namespace lagint
