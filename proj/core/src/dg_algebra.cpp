#include "lagint/dg_algebra.hpp"

#include <sstream>

namespace lagint {

void DgElement::add_term(const DgWord& w, const Polynomial& coeff) {
  if (coeff.is_zero()) return;
  if (!ring_) ring_ = &coeff.ring();
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, coeff);
  } else {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DgElement DgElement::operator+(const DgElement& o) const {
  DgElement out = *this;
  if (!out.ring_) out.ring_ = o.ring_;
  for (const auto& [w, c] : o.terms_) out.add_term(w, c);
  return out;
}

DgElement DgElement::operator-(const DgElement& o) const {
  DgElement out = *this;
  if (!out.ring_) out.ring_ = o.ring_;
  for (const auto& [w, c] : o.terms_) out.add_term(w, -c);
  return out;
}

DgElement DgElement::operator*(const Polynomial& p) const {
  DgElement out;
  out.ring_ = ring_;
  for (const auto& [w, c] : terms_) out.add_term(w, c * p);
  return out;
}

std::string DgElement::to_string(const std::vector<std::string>& odd_names,
                                 const std::vector<std::string>& even_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out << " + ";
    out << "(" << c.to_string() << ")";
    for (int i : w.odd) out << "*" << odd_names.at(i);
    for (size_t i = 0; i < w.even.size(); ++i) {
      if (w.even[i] == 0) continue;
      out << "*" << even_names.at(i);
      if (w.even[i] > 1) out << "^" << w.even[i];
    }
    first = false;
  }
  return out.str();
}

std::optional<std::pair<DgWord, int>> word_product(const DgWord& a, const DgWord& b,
                                                   size_t even_count) {
  DgWord out;
  out.even.assign(even_count, 0);
  for (size_t i = 0; i < a.even.size(); ++i) out.even[i] += a.even[i];
  for (size_t i = 0; i < b.even.size(); ++i) out.even[i] += b.even[i];
  // merge odd letters; sign counts crossings of b-letters over larger a-letters
  int sign = 1;
  for (int x : b.odd) {
    size_t greater = 0;
    for (int y : a.odd) {
      if (y == x) return std::nullopt; // square of an odd generator
      if (y > x) ++greater;
    }
    if (greater % 2 == 1) sign = -sign;
  }
  out.odd = a.odd;
  out.odd.insert(out.odd.end(), b.odd.begin(), b.odd.end());
  std::sort(out.odd.begin(), out.odd.end());
  return std::make_pair(out, sign);
}

DgElement element_product(const DgElement& a, const DgElement& b, size_t even_count) {
  DgElement out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      auto prod = word_product(wa, wb, even_count);
      if (!prod) continue;
      Polynomial coeff = ca * cb;
      if (prod->second < 0) coeff = -coeff;
      out.add_term(prod->first, coeff);
    }
  return out;
}

DgAlgebraPresentation::DgAlgebraPresentation(const PolyRing& ring,
                                             std::vector<DgGenerator> odd,
                                             std::vector<DgGenerator> even)
    : ring_(&ring), odd_(std::move(odd)), even_(std::move(even)) {
  for (const auto& g : odd_)
    if (g.homological_degree != -1)
      throw std::invalid_argument("odd generator with degree != -1");
  for (const auto& g : even_)
    if (g.homological_degree != -2)
      throw std::invalid_argument("even generator with degree != -2");
  if (!d_squared_is_zero())
    throw std::invalid_argument("differential does not square to zero");
}

long DgAlgebraPresentation::word_internal_degree(const DgWord& w) const {
  long d = 0;
  for (int i : w.odd) d += odd_.at(i).internal_degree;
  for (size_t i = 0; i < w.even.size(); ++i)
    d += static_cast<long>(w.even[i]) * even_.at(i).internal_degree;
  return d;
}

std::vector<int> DgAlgebraPresentation::word_character(const DgWord& w) const {
  std::vector<int> chi(ring_->torus_rank, 0);
  auto acc = [&](const std::vector<int>& c, int mult) {
    for (size_t r = 0; r < chi.size() && r < c.size(); ++r) chi[r] += mult * c[r];
  };
  for (int i : w.odd) acc(odd_.at(i).character, 1);
  for (size_t i = 0; i < w.even.size(); ++i) acc(even_.at(i).character, w.even[i]);
  return chi;
}

DgElement DgAlgebraPresentation::differential_of_word(const DgWord& w) const {
  DgElement out;
  // d(x * rest) = d(x) * rest + (-1)^{|x|} x * d(rest), peeled left to right
  if (!w.odd.empty()) {
    int head = w.odd.front();
    DgWord rest = w;
    rest.odd.erase(rest.odd.begin());
    DgElement rest_el;
    rest_el.add_term(rest, Polynomial::constant(*ring_, Scalar::one()));
    out = element_product(odd_.at(head).differential, rest_el, even_.size());
    DgWord head_word;
    head_word.even.assign(even_.size(), 0);
    head_word.odd.push_back(head);
    DgElement head_el;
    head_el.add_term(head_word, Polynomial::constant(*ring_, Scalar::one()));
    DgElement tail = differential_of_word(rest);
    out = out - element_product(head_el, tail, even_.size());
    return out;
  }
  for (size_t l = 0; l < w.even.size(); ++l) {
    if (w.even[l] == 0) continue;
    // peel one even letter: d(eps_l * rest) = d(eps_l)*rest + eps_l*d(rest)
    DgWord rest = w;
    rest.even[l] -= 1;
    DgElement rest_el;
    rest_el.add_term(rest, Polynomial::constant(*ring_, Scalar::one()));
    out = element_product(even_.at(l).differential, rest_el, even_.size());
    DgWord letter;
    letter.even.assign(even_.size(), 0);
    letter.even[l] = 1;
    DgElement letter_el;
    letter_el.add_term(letter, Polynomial::constant(*ring_, Scalar::one()));
    out = out + element_product(letter_el, differential_of_word(rest), even_.size());
    return out;
  }
  return out;
}

DgElement DgAlgebraPresentation::differential(const DgElement& element) const {
  DgElement out;
  for (const auto& [w, c] : element.terms()) {
    DgElement dw = differential_of_word(w);
    out = out + dw * c;
  }
  return out;
}

bool DgAlgebraPresentation::d_squared_is_zero() const {
  for (const auto& g : odd_)
    if (!differential(g.differential).is_zero()) return false;
  for (const auto& g : even_)
    if (!differential(g.differential).is_zero()) return false;
  return true;
}

DgAlgebraPresentation koszul_dg(const std::vector<Polynomial>& gens,
                                const PolyRing& ring) {
  auto cert = is_regular_sequence(gens, ring);
  if (!cert.regular)
    throw NotRegular("koszul_dg: generators are not a regular sequence");
  std::vector<DgGenerator> odd;
  for (size_t i = 0; i < gens.size(); ++i) {
    DgGenerator e;
    e.name = "e" + std::to_string(i + 1);
    e.homological_degree = -1;
    e.internal_degree = gens[i].homogeneous_degree().value();
    if (auto chi = gens[i].homogeneous_character()) e.character = *chi;
    DgWord unit;
    e.differential.add_term(unit, gens[i]);
    odd.push_back(std::move(e));
  }
  return DgAlgebraPresentation(ring, std::move(odd), {});
}

DgAlgebraPresentation tate_moment_extension(
    const std::vector<Polynomial>& ideal_gens,
    const std::vector<Polynomial>& moment_gens,
    const std::vector<std::vector<Polynomial>>& lifts, const PolyRing& ring) {
  if (lifts.size() != moment_gens.size())
    throw std::invalid_argument("tate_moment_extension: lift row count");
  for (size_t i = 0; i < moment_gens.size(); ++i) {
    if (lifts[i].size() != ideal_gens.size())
      throw std::invalid_argument("tate_moment_extension: lift column count");
    Polynomial expanded(ring);
    for (size_t j = 0; j < ideal_gens.size(); ++j)
      expanded = expanded + lifts[i][j] * ideal_gens[j];
    if (expanded != moment_gens[i])
      throw BadLift("tate_moment_extension: lift identity fails for moment " +
                    std::to_string(i + 1));
  }
  size_t n = ideal_gens.size(), l = moment_gens.size();
  std::vector<DgGenerator> odd;
  DgWord unit;
  for (size_t j = 0; j < n; ++j) {
    DgGenerator e;
    e.name = "e" + std::to_string(j + 1);
    e.homological_degree = -1;
    e.internal_degree = ideal_gens[j].homogeneous_degree().value();
    if (auto chi = ideal_gens[j].homogeneous_character()) e.character = *chi;
    e.differential.add_term(unit, ideal_gens[j]);
    odd.push_back(std::move(e));
  }
  for (size_t i = 0; i < l; ++i) {
    DgGenerator f;
    f.name = "f" + std::to_string(i + 1);
    f.homological_degree = -1;
    f.internal_degree = moment_gens[i].homogeneous_degree().value();
    if (auto chi = moment_gens[i].homogeneous_character()) f.character = *chi;
    f.differential.add_term(unit, moment_gens[i]);
    odd.push_back(std::move(f));
  }
  std::vector<DgGenerator> even;
  for (size_t i = 0; i < l; ++i) {
    DgGenerator eps;
    eps.name = "eps" + std::to_string(i + 1);
    eps.homological_degree = -2;
    eps.internal_degree = moment_gens[i].homogeneous_degree().value();
    if (auto chi = moment_gens[i].homogeneous_character()) eps.character = *chi;
    for (size_t j = 0; j < n; ++j) {
      if (lifts[i][j].is_zero()) continue;
      DgWord ej;
      ej.even.assign(l, 0);
      ej.odd.push_back(static_cast<int>(j));
      eps.differential.add_term(ej, lifts[i][j]);
    }
    DgWord fi;
    fi.even.assign(l, 0);
    fi.odd.push_back(static_cast<int>(n + i));
    eps.differential.add_term(fi, -Polynomial::constant(ring, Scalar::one()));
    even.push_back(std::move(eps));
  }
  return DgAlgebraPresentation(ring, std::move(odd), std::move(even));
}

} // namespace lagint
