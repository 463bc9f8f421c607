#include "lagint/groebner.hpp"

#include <algorithm>
#include <deque>

namespace lagint {

namespace {

// Division of f by divisors: f = sum q_i * divisors_i + remainder, where no
// remainder term is divisible by any divisor leading term.  Divisors are
// tried in list order; term selection follows `order`.
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      MonomialOrder order, bool track_quotients) {
  const PolyRing& ring = f.ring();
  DivisionResult out;
  out.remainder = Polynomial(ring);
  if (track_quotients)
    out.quotients.assign(divisors.size(), Polynomial(ring));
  std::vector<std::pair<Monomial, Scalar>> lts;
  lts.reserve(divisors.size());
  for (const auto& d : divisors) lts.push_back(d.leading_term(order));

  Polynomial work = f;
  while (!work.is_zero()) {
    auto [lm, lc] = work.leading_term(order);
    bool reduced = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      if (!monomial_divides(lts[i].first, lm)) continue;
      Monomial q = monomial_quotient(lm, lts[i].first);
      Scalar factor = lc / lts[i].second;
      Polynomial qterm(ring);
      qterm.add_term(q, factor);
      work = work - qterm * divisors[i];
      if (track_quotients) out.quotients[i] = out.quotients[i] + qterm;
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial lead(ring);
      lead.add_term(lm, lc);
      out.remainder = out.remainder + lead;
      work = work - lead;
    }
  }
  return out;
}

Polynomial make_monic(const Polynomial& p, MonomialOrder order) {
  return p * p.leading_term(order).second.inverse();
}

struct PairKey {
  long degree;
  Monomial lcm;
  size_t i, j;
  bool operator<(const PairKey& o) const {
    if (degree != o.degree) return degree < o.degree;
    if (lcm != o.lcm) return lcm < o.lcm;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

} // namespace

GroebnerBasis buchberger(const PolyRing& ring, const std::vector<Polynomial>& gens,
                         MonomialOrder order) {
  std::vector<Polynomial> basis;
  for (const auto& g : gens)
    if (!g.is_zero()) basis.push_back(make_monic(g, order));

  auto queue_pairs = [&](std::vector<PairKey>& pairs, size_t fresh) {
    for (size_t i = 0; i < fresh; ++i) {
      Monomial l = monomial_lcm(basis[i].leading_term(order).first,
                                basis[fresh].leading_term(order).first);
      pairs.push_back({monomial_degree(ring, l), l, i, fresh});
    }
  };

  std::vector<PairKey> pairs;
  for (size_t j = 1; j < basis.size(); ++j) queue_pairs(pairs, j);

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end());
    PairKey key = *best;
    pairs.erase(best);
    const auto lt_i = basis[key.i].leading_term(order);
    const auto lt_j = basis[key.j].leading_term(order);
    // product criterion: coprime leading monomials reduce to zero
    Monomial sum(lt_i.first.size());
    bool coprime = true;
    for (size_t v = 0; v < sum.size(); ++v)
      if (lt_i.first[v] > 0 && lt_j.first[v] > 0) coprime = false;
    if (coprime) continue;
    Polynomial si(ring), sj(ring);
    si.add_term(monomial_quotient(key.lcm, lt_i.first), Scalar::one());
    sj.add_term(monomial_quotient(key.lcm, lt_j.first), Scalar::one());
    Polynomial s = si * basis[key.i] - sj * basis[key.j];
    Polynomial rem = divide(s, basis, order, false).remainder;
    if (rem.is_zero()) continue;
    basis.push_back(make_monic(rem, order));
    queue_pairs(pairs, basis.size() - 1);
  }

  // interreduce to the unique reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      std::vector<Polynomial> others;
      for (size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      if (others.empty()) break;
      Polynomial rem = divide(basis[i], others, order, false).remainder;
      if (rem.is_zero()) {
        basis.erase(basis.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
      rem = make_monic(rem, order);
      if (rem != basis[i]) {
        basis[i] = rem;
        changed = true;
      }
    }
  }
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return monomial_less(ring, order, a.leading_term(order).first,
                         b.leading_term(order).first);
  });
  return GroebnerBasis{order, std::move(basis)};
}

const GroebnerBasis& IdealPresentation::groebner(MonomialOrder order) const {
  if (!cache_) cache_ = buchberger(*ring_, gens_, order);
  return *cache_;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (gb.elements.empty()) return f;
  return divide(f, gb.elements, gb.order, false).remainder;
}

std::vector<Polynomial> lift_coefficients(const Polynomial& a,
                                          const std::vector<Polynomial>& gens) {
  const PolyRing& ring = a.ring();
  const MonomialOrder order = MonomialOrder::GradedLex;
  // Tracked Buchberger: every basis element keeps its expression in `gens`.
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> reps;
  for (size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].is_zero()) continue;
    Scalar inv = gens[j].leading_term(order).second.inverse();
    basis.push_back(gens[j] * inv);
    std::vector<Polynomial> rep(gens.size(), Polynomial(ring));
    rep[j] = Polynomial::constant(ring, inv);
    reps.push_back(std::move(rep));
  }
  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    auto lt_i = basis[i].leading_term(order);
    auto lt_j = basis[j].leading_term(order);
    Monomial l = monomial_lcm(lt_i.first, lt_j.first);
    Polynomial si(ring), sj(ring);
    si.add_term(monomial_quotient(l, lt_i.first), Scalar::one());
    sj.add_term(monomial_quotient(l, lt_j.first), Scalar::one());
    Polynomial s = si * basis[i] - sj * basis[j];
    DivisionResult div = divide(s, basis, order, true);
    if (div.remainder.is_zero()) continue;
    // representation of the remainder: s-pair reps minus quotient contributions
    std::vector<Polynomial> rep(gens.size(), Polynomial(ring));
    for (size_t g = 0; g < gens.size(); ++g) {
      rep[g] = si * reps[i][g] - sj * reps[j][g];
      for (size_t b = 0; b < basis.size(); ++b)
        rep[g] = rep[g] - div.quotients[b] * reps[b][g];
    }
    Scalar inv = div.remainder.leading_term(order).second.inverse();
    basis.push_back(div.remainder * inv);
    for (auto& r : rep) r = r * inv;
    reps.push_back(std::move(rep));
    for (size_t b = 0; b + 1 < basis.size(); ++b) pairs.emplace_back(b, basis.size() - 1);
  }

  DivisionResult div = divide(a, basis, order, true);
  if (!div.remainder.is_zero())
    throw NotInIdeal("element is not in the ideal: remainder " +
                     div.remainder.to_string());
  std::vector<Polynomial> coeffs(gens.size(), Polynomial(ring));
  for (size_t g = 0; g < gens.size(); ++g)
    for (size_t b = 0; b < basis.size(); ++b)
      coeffs[g] = coeffs[g] + div.quotients[b] * reps[b][g];
  // exact re-expansion check
  Polynomial check(ring);
  for (size_t g = 0; g < gens.size(); ++g) check = check + coeffs[g] * gens[g];
  if (check != a) throw std::logic_error("lift_coefficients: identity failed");
  return coeffs;
}

namespace {

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool divisible = false;
    for (size_t j = 0; j < gens.size() && !divisible; ++j)
      if (j != i && monomial_divides(gens[j], gens[i]) && gens[j] != gens[i])
        divisible = true;
    if (!divisible) out.push_back(gens[i]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Numerator of the Hilbert series of R/I for a monomial ideal I, by the
// pivot-variable recursion N(I) = N(I + (x)) + t^{deg x} N(I : x).
Poly1 monomial_hilbert_numerator(const PolyRing& ring, std::vector<Monomial> gens) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return Poly1(Integer(1));
  for (const auto& m : gens) {
    bool constant = true;
    for (int e : m) constant = constant && e == 0;
    if (constant) return Poly1();
  }
  // pairwise coprime supports: complete intersection count
  bool coprime = true;
  for (size_t i = 0; i < gens.size() && coprime; ++i)
    for (size_t j = i + 1; j < gens.size() && coprime; ++j)
      for (size_t v = 0; v < ring.nvars(); ++v)
        if (gens[i][v] > 0 && gens[j][v] > 0) {
          coprime = false;
          break;
        }
  if (coprime) {
    Poly1 out(Integer(1));
    for (const auto& m : gens) {
      long d = monomial_degree(ring, m);
      Poly1 factor = Poly1(Integer(1)) - Poly1::monomial(Integer(1), static_cast<size_t>(d));
      out = out * factor;
    }
    return out;
  }
  // pivot: the variable occurring in the most generators
  size_t pivot = 0, best = 0;
  for (size_t v = 0; v < ring.nvars(); ++v) {
    size_t count = 0;
    for (const auto& m : gens) count += m[v] > 0 ? 1 : 0;
    if (count > best) {
      best = count;
      pivot = v;
    }
  }
  std::vector<Monomial> plus, colon;
  Monomial xv(ring.nvars(), 0);
  xv[pivot] = 1;
  plus.push_back(xv);
  for (const auto& m : gens) {
    if (m[pivot] == 0) plus.push_back(m);
    Monomial q = m;
    if (q[pivot] > 0) q[pivot] -= 1;
    colon.push_back(q);
  }
  Poly1 shift = Poly1::monomial(Integer(1), static_cast<size_t>(ring.degrees[pivot]));
  return monomial_hilbert_numerator(ring, plus) +
         shift * monomial_hilbert_numerator(ring, colon);
}

} // namespace

HilbertData hilbert_series(const IdealPresentation& ideal, MonomialOrder order) {
  const PolyRing& ring = ideal.ring();
  for (const auto& g : ideal.generators())
    if (!g.homogeneous_degree())
      throw std::invalid_argument("hilbert_series: inhomogeneous generator " +
                                  g.to_string());
  const GroebnerBasis& gb = ideal.groebner(order);
  std::vector<Monomial> lt;
  for (const auto& g : gb.elements) lt.push_back(g.leading_term(order).first);
  std::vector<int> degs;
  for (size_t v = 0; v < ring.nvars(); ++v) degs.push_back(ring.degrees[v]);
  return HilbertData{monomial_hilbert_numerator(ring, lt), degs};
}

RegularSequenceCertificate is_regular_sequence(const std::vector<Polynomial>& seq,
                                               const PolyRing& ring) {
  RegularSequenceCertificate cert;
  cert.expected_numerator = Poly1(Integer(1));
  for (const auto& g : seq) {
    auto d = g.homogeneous_degree();
    if (!d || g.is_zero())
      throw std::invalid_argument("is_regular_sequence: elements must be nonzero "
                                  "and homogeneous");
    cert.expected_numerator =
        cert.expected_numerator *
        (Poly1(Integer(1)) - Poly1::monomial(Integer(1), static_cast<size_t>(*d)));
  }
  IdealPresentation ideal(ring, seq);
  cert.actual_numerator = hilbert_series(ideal).numerator;
  cert.regular = cert.actual_numerator == cert.expected_numerator;
  return cert;
}

std::vector<long> hilbert_function(const HilbertData& data, size_t max_degree) {
  Poly1 den(Integer(1));
  for (int d : data.ambient_degrees)
    den = den * (Poly1(Integer(1)) - Poly1::monomial(Integer(1), static_cast<size_t>(d)));
  PoincareSeries series(data.numerator, den);
  auto coeffs = series_truncate(series, max_degree);
  std::vector<long> out(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (denominator(coeffs[i]) != 1)
      throw std::logic_error("hilbert_function: non-integer coefficient");
    out[i] = static_cast<long>(numerator(coeffs[i]));
  }
  return out;
}

namespace {

void enumerate_monomials(const PolyRing& ring, long degree, size_t var, Monomial& cur,
                         std::vector<Monomial>& out) {
  if (var + 1 == ring.nvars()) {
    if (degree % ring.degrees[var] == 0) {
      cur[var] = static_cast<int>(degree / ring.degrees[var]);
      out.push_back(cur);
      cur[var] = 0;
    }
    return;
  }
  for (long e = 0; e * ring.degrees[var] <= degree; ++e) {
    cur[var] = static_cast<int>(e);
    enumerate_monomials(ring, degree - e * ring.degrees[var], var + 1, cur, out);
  }
  cur[var] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(const PolyRing& ring, long degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (ring.nvars() == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  Monomial cur(ring.nvars(), 0);
  enumerate_monomials(ring, degree, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> standard_monomials(const PolyRing& ring, const GroebnerBasis& gb,
                                         long degree) {
  std::vector<Monomial> lt;
  for (const auto& g : gb.elements) lt.push_back(g.leading_term(gb.order).first);
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(ring, degree)) {
    bool reducible = false;
    for (const auto& l : lt)
      if (monomial_divides(l, m)) {
        reducible = true;
        break;
      }
    if (!reducible) out.push_back(std::move(m));
  }
  return out;
}

std::vector<Polynomial> minimal_generators(const PolyRing& ring,
                                           const std::vector<Polynomial>& gens,
                                           MonomialOrder order) {
  GroebnerBasis gb = buchberger(ring, gens, order);
  std::vector<Polynomial> sorted = gb.elements;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Polynomial& a, const Polynomial& b) {
                     return a.homogeneous_degree().value_or(0) <
                            b.homogeneous_degree().value_or(0);
                   });
  std::vector<Polynomial> kept;
  for (const auto& g : sorted) {
    if (kept.empty()) {
      kept.push_back(g);
      continue;
    }
    GroebnerBasis partial = buchberger(ring, kept, order);
    if (!normal_form(g, partial).is_zero()) kept.push_back(g);
  }
  return kept;
}

} // namespace lagint
