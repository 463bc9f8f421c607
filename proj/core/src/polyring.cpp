#include "lagint/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lagint {

PolyRing::PolyRing(std::vector<std::string> names, std::vector<int> internal_degrees,
                   std::vector<std::vector<int>> torus_weights)
    : vars(std::move(names)),
      degrees(std::move(internal_degrees)),
      weights(std::move(torus_weights)) {
  if (vars.size() != degrees.size())
    throw std::invalid_argument("PolyRing: variable/degree count mismatch");
  for (int d : degrees)
    if (d < 1) throw std::invalid_argument("PolyRing: internal degrees must be >= 1");
  if (!weights.empty()) {
    if (weights.size() != vars.size())
      throw std::invalid_argument("PolyRing: weight count mismatch");
    torus_rank = static_cast<int>(weights.front().size());
    for (const auto& w : weights)
      if (static_cast<int>(w.size()) != torus_rank)
        throw std::invalid_argument("PolyRing: inconsistent torus rank");
  }
}

int PolyRing::var_index(const std::string& name) const {
  auto it = std::find(vars.begin(), vars.end(), name);
  return it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
}

const std::vector<int>& PolyRing::weight(size_t v) const {
  static const std::vector<int> kEmpty;
  return weights.empty() ? kEmpty : weights.at(v);
}

long monomial_degree(const PolyRing& ring, const Monomial& m) {
  long d = 0;
  for (size_t i = 0; i < m.size(); ++i) d += static_cast<long>(m[i]) * ring.degrees[i];
  return d;
}

std::vector<int> monomial_character(const PolyRing& ring, const Monomial& m) {
  std::vector<int> chi(ring.torus_rank, 0);
  if (ring.torus_rank == 0) return chi;
  for (size_t i = 0; i < m.size(); ++i)
    for (int r = 0; r < ring.torus_rank; ++r) chi[r] += m[i] * ring.weights[i][r];
  return chi;
}

bool monomial_less(const PolyRing& ring, MonomialOrder order, const Monomial& a,
                   const Monomial& b) {
  if (order == MonomialOrder::GradedLex) {
    long da = monomial_degree(ring, a), db = monomial_degree(ring, b);
    if (da != db) return da < db;
  }
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomial_quotient(const Monomial& b, const Monomial& a) {
  Monomial q(b.size());
  for (size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
  return q;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial l(a.size());
  for (size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

Polynomial Polynomial::constant(const PolyRing& ring, const Scalar& c) {
  Polynomial p(ring);
  p.add_term(Monomial(ring.nvars(), 0), c);
  return p;
}

Polynomial Polynomial::variable(const PolyRing& ring, size_t v) {
  Polynomial p(ring);
  Monomial m(ring.nvars(), 0);
  m.at(v) = 1;
  p.add_term(m, Scalar::one());
  return p;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero() : it->second;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*ring_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out(*ring_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(ma.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
  Polynomial out(*ring_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

std::pair<Monomial, Scalar> Polynomial::leading_term(MonomialOrder order) const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (monomial_less(*ring_, order, best->first, it->first)) best = it;
  return {best->first, best->second};
}

std::optional<long> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  long d = monomial_degree(*ring_, terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (monomial_degree(*ring_, m) != d) return std::nullopt;
  return d;
}

std::optional<std::vector<int>> Polynomial::homogeneous_character() const {
  if (terms_.empty()) return std::vector<int>(ring_->torus_rank, 0);
  auto chi = monomial_character(*ring_, terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (monomial_character(*ring_, m) != chi) return std::nullopt;
  return chi;
}

Polynomial Polynomial::derivative(size_t var) const {
  Polynomial out(*ring_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    out.add_term(d, c * Scalar(static_cast<long>(m[var])));
  }
  return out;
}

Polynomial Polynomial::substitute(const PolyRing& target,
                                  const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->nvars())
    throw std::invalid_argument("substitute: image count mismatch");
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Polynomial term = Polynomial::constant(target, c);
    for (size_t v = 0; v < m.size(); ++v)
      for (int e = 0; e < m[v]; ++e) term = term * images[v];
    out = out + term;
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // render highest lexicographic monomials first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) out << " + ";
    bool has_vars = false;
    for (int e : m) has_vars = has_vars || e > 0;
    std::string cs = c.to_string();
    if (!has_vars || cs != "1") {
      if (cs.find_first_of("+*") != std::string::npos)
        out << "(" << cs << ")";
      else
        out << cs;
      if (has_vars) out << "*";
    }
    bool first_var = true;
    for (size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (!first_var) out << "*";
      out << ring_->vars[v];
      if (m[v] > 1) out << "^" << m[v];
      first_var = false;
    }
    first = false;
  }
  return out.str();
}

namespace {

struct Parser {
  const PolyRing& ring;
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  bool consume(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(pos) + ": " + what);
  }

  Polynomial parse_expr() {
    Polynomial acc = parse_term(consume('-'));
    while (true) {
      if (consume('+'))
        acc = acc + parse_term(false);
      else if (consume('-'))
        acc = acc + parse_term(true);
      else
        break;
    }
    return acc;
  }

  Polynomial parse_term(bool negated) {
    Polynomial acc = parse_factor();
    while (consume('*')) acc = acc * parse_factor();
    return negated ? -acc : acc;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_atom();
    if (consume('^')) {
      long e = parse_integer();
      if (e < 0) fail("negative exponent");
      Polynomial out = Polynomial::constant(ring, Scalar::one());
      for (long i = 0; i < e; ++i) out = out * base;
      return out;
    }
    return base;
  }

  long parse_integer() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stol(text.substr(start, pos - start));
  }

  Polynomial parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    if (consume('(')) {
      Polynomial inner = parse_expr();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      std::string num = text.substr(start, pos - start);
      if (consume('/')) {
        skip_ws();
        size_t ds = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (ds == pos) fail("expected denominator");
        num += "/" + text.substr(ds, pos - ds);
      }
      return Polynomial::constant(ring, Scalar(parse_rational(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string name = text.substr(start, pos - start);
      int v = ring.var_index(name);
      if (v < 0) fail("unknown variable '" + name + "'");
      return Polynomial::variable(ring, static_cast<size_t>(v));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

} // namespace

Polynomial parse_polynomial(const PolyRing& ring, const std::string& text) {
  Parser p{ring, text};
  Polynomial out = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

} // namespace lagint
