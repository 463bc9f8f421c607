#include "lagint/torus_git.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace lagint {

TorusRepresentation TorusRepresentation::cotangent_lift() const {
  TorusRepresentation out;
  out.rank = rank;
  out.linearization = linearization;
  out.weights = weights;
  for (const auto& w : weights) {
    std::vector<int> dual = w;
    for (int& a : dual) a = -a;
    out.weights.push_back(std::move(dual));
  }
  for (size_t i = 0; i < weights.size(); ++i) out.names.push_back(coordinate_name(i));
  for (size_t i = 0; i < weights.size(); ++i)
    out.names.push_back("w" + std::to_string(i + 1));
  return out;
}

namespace {

// Exact dense solve of a symmetric positive-definite rational system.
std::optional<std::vector<Rational>> solve_dense(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> b) {
  size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = n;
    for (size_t r = col; r < n; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == n) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

size_t integer_rows_rank(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    std::vector<Rational> row(r.size());
    for (size_t i = 0; i < r.size(); ++i) row[i] = Rational(r[i]);
    m.push_back(std::move(row));
  }
  size_t rank = 0;
  size_t cols = m.empty() ? 0 : m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t p = m.size();
    for (size_t r = row; r < m.size(); ++r)
      if (m[r][col] != 0) {
        p = r;
        break;
      }
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    for (size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[row][col];
      for (size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

Rational pair_iw(const std::vector<int>& w, const std::vector<Rational>& x) {
  Rational acc(0);
  for (size_t i = 0; i < w.size(); ++i) acc += Rational(w[i]) * x[i];
  return acc;
}

} // namespace

std::vector<Rational> cone_projection(const std::vector<Rational>& target,
                                      const std::vector<std::vector<int>>& cone_normals) {
  const size_t r = target.size();
  const size_t m = cone_normals.size();
  if (m > 16) throw std::invalid_argument("cone_projection: too many inequalities");
  auto feasible = [&](const std::vector<Rational>& x) {
    for (const auto& w : cone_normals)
      if (pair_iw(w, x) < 0) return false;
    return true;
  };
  if (feasible(target)) return target;

  std::optional<std::vector<Rational>> best;
  // active sets of linearly independent normals, |S| <= rank
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    std::vector<size_t> subset;
    for (size_t i = 0; i < m; ++i)
      if (mask & (1ul << i)) subset.push_back(i);
    if (subset.size() > r) continue;
    std::vector<std::vector<int>> rows;
    for (size_t i : subset) rows.push_back(cone_normals[i]);
    if (integer_rows_rank(rows) != subset.size()) continue;
    // stationarity: beta = target + W^T mu with W beta = 0:
    // (W W^T) mu = -W target
    size_t k = subset.size();
    std::vector<std::vector<Rational>> gram(k, std::vector<Rational>(k, Rational(0)));
    std::vector<Rational> rhs(k, Rational(0));
    for (size_t a = 0; a < k; ++a) {
      for (size_t b = 0; b < k; ++b)
        for (size_t c = 0; c < r; ++c)
          gram[a][b] += Rational(rows[a][c]) * Rational(rows[b][c]);
      rhs[a] = -pair_iw(rows[a], target);
    }
    auto mu = solve_dense(gram, rhs);
    if (!mu) continue;
    bool nonneg = true;
    for (const auto& v : *mu) nonneg = nonneg && v >= 0;
    if (!nonneg) continue;
    std::vector<Rational> beta = target;
    for (size_t a = 0; a < k; ++a)
      for (size_t c = 0; c < r; ++c) beta[c] += (*mu)[a] * Rational(rows[a][c]);
    if (!feasible(beta)) continue;
    // KKT passed; convexity makes any such point the unique projection
    if (best && *best != beta)
      throw std::logic_error("cone_projection: inconsistent KKT candidates");
    best = std::move(beta);
  }
  if (!best) throw std::logic_error("cone_projection: no KKT candidate found");
  return *best;
}

std::vector<Rational> optimal_destabilizer(const TorusRepresentation& rep,
                                           const std::vector<size_t>& support) {
  std::vector<Rational> target;
  for (int c : rep.linearization) target.emplace_back(-c);
  target.resize(static_cast<size_t>(rep.rank), Rational(0));
  std::vector<std::vector<int>> normals;
  for (size_t i : support) normals.push_back(rep.weights.at(i));
  return cone_projection(target, normals);
}

namespace {

bool is_zero_vector(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::vector<Integer> primitive_representative(const std::vector<Rational>& beta) {
  Integer lcm_den(1);
  for (const auto& x : beta) lcm_den = lcm(lcm_den, denominator(x));
  std::vector<Integer> out;
  Integer g(0);
  for (const auto& x : beta) {
    Integer v = numerator(x * Rational(lcm_den));
    g = gcd(g, v);
    out.push_back(v);
  }
  if (g == 0) g = 1;
  for (auto& v : out) v /= g;
  return out;
}

std::vector<std::vector<size_t>> all_supports(size_t n) {
  std::vector<std::vector<size_t>> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<size_t> s;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1ul << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

} // namespace

SemistableLocus semistable_locus(const TorusRepresentation& rep) {
  size_t n = rep.coords();
  if (n > 16) throw std::invalid_argument("semistable_locus: too many coordinates");
  std::vector<std::vector<size_t>> semistable;
  for (const auto& support : all_supports(n))
    if (is_zero_vector(optimal_destabilizer(rep, support))) semistable.push_back(support);
  SemistableLocus out;
  for (const auto& s : semistable) {
    bool minimal = true;
    for (size_t drop = 0; drop < s.size() && minimal; ++drop) {
      std::vector<size_t> sub;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) sub.push_back(s[i]);
      if (is_zero_vector(optimal_destabilizer(rep, sub))) minimal = false;
    }
    if (minimal) out.minimal_supports.push_back(s);
  }
  if (out.minimal_supports.size() == 1 && out.minimal_supports[0].empty()) {
    out.everything_semistable = true;
    out.description = "all points semistable";
    return out;
  }
  std::ostringstream text;
  for (size_t i = 0; i < out.minimal_supports.size(); ++i) {
    if (i) text << " U ";
    text << "{";
    const auto& s = out.minimal_supports[i];
    for (size_t j = 0; j < s.size(); ++j) {
      if (j) text << ", ";
      text << rep.coordinate_name(s[j]) << " != 0";
    }
    text << "}";
  }
  if (out.minimal_supports.empty()) text << "empty (no semistable points)";
  out.description = text.str();
  return out;
}

std::vector<HKKNStratum> hkkn_stratification(const TorusRepresentation& rep) {
  size_t n = rep.coords();
  std::map<std::vector<Integer>, HKKNStratum> strata;
  for (const auto& support : all_supports(n)) {
    auto beta = optimal_destabilizer(rep, support);
    if (is_zero_vector(beta)) continue;
    auto key = primitive_representative(beta);
    auto it = strata.find(key);
    if (it == strata.end()) {
      HKKNStratum s;
      s.beta_primitive = key;
      s.beta = beta;
      for (size_t i = 0; i < n; ++i) {
        Rational p = pair_iw(rep.weights[i], beta);
        if (p == 0)
          s.fixed_indices.push_back(i);
        else if (p < 0)
          ++s.codim;
      }
      it = strata.emplace(key, std::move(s)).first;
    }
    it->second.supports.push_back(support);
  }
  std::vector<HKKNStratum> out;
  for (auto& [key, s] : strata) out.push_back(std::move(s));
  return out;
}

namespace {

// Recursive residual series of the semistable part of the coordinate
// subspace spanned by `indices`, with the (possibly rational) residual
// character.
PoincareSeries semistable_series(const TorusRepresentation& rep,
                                 const std::vector<size_t>& indices,
                                 const std::vector<Rational>& chi, int depth) {
  if (depth > 64)
    throw std::logic_error("stratum series recursion failed to terminate");
  PoincareSeries total =
      PoincareSeries::inverse_one_minus_t2(static_cast<unsigned>(rep.rank));
  // stratify the subspace: supports within `indices`
  std::map<std::vector<Integer>, std::pair<std::vector<Rational>, size_t>> strata;
  std::vector<std::vector<size_t>> positions = all_supports(indices.size());
  for (const auto& pos : positions) {
    std::vector<std::vector<int>> normals;
    for (size_t p : pos) normals.push_back(rep.weights[indices[p]]);
    std::vector<Rational> target;
    for (const auto& c : chi) target.push_back(-c);
    auto beta = cone_projection(target, normals);
    if (is_zero_vector(beta)) continue;
    auto key = primitive_representative(beta);
    if (strata.count(key)) continue;
    size_t codim = 0;
    for (size_t i : indices)
      if (pair_iw(rep.weights[i], beta) < 0) ++codim;
    strata.emplace(key, std::make_pair(beta, codim));
  }
  PoincareSeries result = total;
  for (const auto& [key, data] : strata) {
    const auto& [beta, codim] = data;
    std::vector<size_t> fixed;
    for (size_t i : indices)
      if (pair_iw(rep.weights[i], beta) == 0) fixed.push_back(i);
    std::vector<Rational> residual_chi = chi;
    for (size_t c = 0; c < residual_chi.size(); ++c) residual_chi[c] += beta[c];
    PoincareSeries piece = semistable_series(rep, fixed, residual_chi, depth + 1);
    result = result - piece.shifted(2 * codim);
  }
  return result.simplified();
}

} // namespace

PoincareSeries stratum_poincare_series(const TorusRepresentation& rep,
                                       const HKKNStratum& stratum) {
  std::vector<Rational> residual_chi;
  for (int c : rep.linearization) residual_chi.emplace_back(c);
  residual_chi.resize(static_cast<size_t>(rep.rank), Rational(0));
  for (size_t c = 0; c < residual_chi.size(); ++c) residual_chi[c] += stratum.beta[c];
  return semistable_series(rep, stratum.fixed_indices, residual_chi, 0).simplified();
}

MorseReport morse_equality_check(const TorusRepresentation& rep, size_t truncation) {
  MorseReport report;
  report.total = PoincareSeries::inverse_one_minus_t2(static_cast<unsigned>(rep.rank));
  auto strata = hkkn_stratification(rep);
  PoincareSeries sum = PoincareSeries::constant(Integer(0));
  for (const auto& s : strata) {
    PoincareSeries piece = stratum_poincare_series(rep, s);
    sum = sum + piece.shifted(2 * s.codim);
  }
  report.residual = (report.total - sum).simplified();
  report.residual_coefficients = series_truncate(report.residual, truncation);
  report.residual_nonnegative = true;
  for (const auto& c : report.residual_coefficients)
    if (c < 0) report.residual_nonnegative = false;
  // recompute the truncated identity along both routes
  auto lhs = series_truncate(report.total, truncation);
  auto rhs = series_truncate(sum, truncation);
  report.identity_holds = true;
  for (size_t k = 0; k <= truncation; ++k)
    if (lhs[k] != rhs[k] + report.residual_coefficients[k]) report.identity_holds = false;
  return report;
}

AtiyahBottCertificate atiyah_bott_certificate(const TorusRepresentation& rep,
                                              const HKKNStratum& stratum) {
  AtiyahBottCertificate cert;
  cert.ok = true;
  for (size_t i = 0; i < rep.coords(); ++i) {
    Rational p = pair_iw(rep.weights[i], stratum.beta);
    if (p < 0) cert.normal_pairings.emplace_back(i, p);
    if (p >= 0) continue;
  }
  if (cert.normal_pairings.size() != stratum.codim) {
    cert.ok = false;
    throw CertificateFailed("normal direction count disagrees with the stratum");
  }
  for (const auto& [i, p] : cert.normal_pairings)
    if (p >= 0) {
      cert.ok = false;
      throw CertificateFailed("normal pairing of coordinate " +
                              rep.coordinate_name(i) + " is not negative");
    }
  return cert;
}

} // namespace lagint
