#include "lagint/runner.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <filesystem>
#include <thread>

#include "lagint/scenario.hpp"
#include "lagint/simplicial.hpp"
#include "lagint/torus_git.hpp"

namespace lagint {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// expected-value comparisons

template <typename Table>
void compare_expected_table(ScenarioReport& report, const json& expected,
                            const std::string& key, const Table& table) {
  if (!expected.contains(key)) return;
  CheckResult check;
  check.name = "expected table '" + key + "'";
  check.pass = true;
  Table reference = table; // copy shape
  reference.entries.clear();
  for (const auto& row : expected.at(key)) {
    long a = std::stol(row.at(0).template get<std::string>());
    long b = std::stol(row.at(1).template get<std::string>());
    unsigned long v = std::stoul(row.at(2).template get<std::string>());
    reference.entries[{static_cast<typename decltype(reference.entries)::key_type::first_type>(a), b}] = v;
  }
  if (!(reference.entries == table.entries)) {
    check.pass = false;
    for (const auto& [k, v] : table.entries) {
      auto it = reference.entries.find(k);
      if (it == reference.entries.end() || it->second != v)
        check.details.push_back("computed (" + std::to_string(k.first) + "," +
                                std::to_string(k.second) + ")=" + std::to_string(v) +
                                " not in expected");
    }
    for (const auto& [k, v] : reference.entries) {
      auto it = table.entries.find(k);
      if (it == table.entries.end())
        check.details.push_back("expected (" + std::to_string(k.first) + "," +
                                std::to_string(k.second) + ")=" + std::to_string(v) +
                                " missing");
    }
  }
  report.checks.push_back(std::move(check));
}

// ---------------------------------------------------------------------------
// lagrangian_intersection pipeline

LagrangianDescriptor parse_descriptor(const SymplecticModel& model, const json& spec) {
  std::string type = spec.at("type").get<std::string>();
  if (type == "zero_section") return LagrangianDescriptor::zero_section();
  if (type == "graph") {
    // build the base-variable ring view for parsing components
    if (spec.contains("potential")) {
      Polynomial f =
          parse_polynomial(model.ring, spec.at("potential").get<std::string>());
      return LagrangianDescriptor::graph_of_potential(model, f);
    }
    std::vector<Polynomial> components;
    for (const auto& c : spec.at("components"))
      components.push_back(parse_polynomial(model.ring, c.get<std::string>()));
    return LagrangianDescriptor::graph(std::move(components));
  }
  if (type == "conormal") {
    std::vector<size_t> vanishing;
    for (const auto& v : spec.at("vanishing")) {
      int idx = model.ring.var_index(v.get<std::string>());
      if (idx < 0 || static_cast<size_t>(idx) >= model.pairs)
        throw ScenarioParseError("conormal vanishing set must name base variables");
      vanishing.push_back(static_cast<size_t>(idx));
    }
    return LagrangianDescriptor::conormal(std::move(vanishing));
  }
  if (type == "linear") {
    std::vector<std::vector<Rational>> basis;
    for (const auto& row : spec.at("basis")) {
      std::vector<Rational> v;
      for (const auto& entry : row) {
        if (entry.is_string())
          v.push_back(parse_rational(entry.get<std::string>()));
        else
          v.push_back(Rational(entry.get<long>()));
      }
      basis.push_back(std::move(v));
    }
    return LagrangianDescriptor::linear(std::move(basis));
  }
  throw ScenarioParseError("unknown lagrangian type '" + type + "'");
}

TwistRequest parse_twist(const SymplecticModel& model, const json& body,
                         const std::string& key) {
  TwistRequest req;
  if (!body.contains(key)) return req;
  const auto& t = body.at(key);
  if (t.is_string()) {
    std::string s = t.get<std::string>();
    if (s == "none") return req;
    if (s == "half_canonical") {
      req.kind = TwistRequest::Kind::HalfCanonical;
      return req;
    }
    throw ScenarioParseError("unknown twist '" + s + "'");
  }
  req.kind = TwistRequest::Kind::Explicit;
  req.explicit_data.degree = t.value("degree", 0l);
  req.explicit_data.character =
      t.value("character", std::vector<int>(model.torus_rank(), 0));
  return req;
}

void run_lagrangian(const ScenarioFile& file, const Window& window,
                    ScenarioReport& report) {
  const json& body = file.body;
  std::vector<std::string> base_names, fiber_names;
  std::vector<int> degrees;
  std::vector<std::vector<int>> weights;
  bool any_weight = false;
  for (const auto& pair : body.at("pairs")) {
    base_names.push_back(pair.at("base").get<std::string>());
    fiber_names.push_back(pair.at("fiber").get<std::string>());
    degrees.push_back(pair.value("degree", 1));
    if (pair.contains("weight")) {
      any_weight = true;
      weights.push_back(pair.at("weight").get<std::vector<int>>());
    } else {
      weights.push_back({});
    }
  }
  if (any_weight)
    for (auto& w : weights)
      if (w.empty()) throw ScenarioParseError("all pairs need weights, or none");
  if (!any_weight) weights.clear();
  std::vector<int> linearization;
  if (body.contains("linearization"))
    linearization = body.at("linearization").get<std::vector<int>>();
  SymplecticModel model = SymplecticModel::cotangent(base_names, fiber_names, degrees,
                                                     weights, linearization);
  const auto& lags = body.at("lagrangians");
  if (lags.size() != 2)
    throw ScenarioParseError("lagrangian_intersection needs exactly two lagrangians");
  LagrangianDescriptor l1 = parse_descriptor(model, lags.at(0));
  LagrangianDescriptor l2 = parse_descriptor(model, lags.at(1));
  TwistRequest t1 = parse_twist(model, body, "twist1");
  TwistRequest t2 = parse_twist(model, body, "twist2");

  IntersectionScenario scenario = build_scenario(model, l1, l2, t1, t2);
  scenario.proper_over_affine = file.proper_over_affine;
  scenario.finite_invariants = file.finite_invariants;

  report.notes.emplace_back("dim B", std::to_string(scenario.dim_b));
  report.notes.emplace_back("excess rank", std::to_string(scenario.excess_rank));
  report.notes.emplace_back("codim(B, C2)", std::to_string(scenario.codim_b_in_c2));
  report.notes.emplace_back("codim(B, C1)", std::to_string(scenario.codim_b_in_c1));
  report.notes.emplace_back("det N_{B/C2}", scenario.det_normal_c2.to_string());
  report.notes.emplace_back("det N_{B/C1}", scenario.det_normal_c1.to_string());
  if (model.torus_rank() > 0) {
    std::string level;
    for (const auto& c : scenario.moment_level)
      level += (level.empty() ? "" : ", ") + rational_to_string(c);
    report.notes.emplace_back("moment level", "(" + level + ")");
  }
  report.notes.emplace_back("proper_over_affine (assumed)",
                            file.proper_over_affine ? "true" : "false");
  report.notes.emplace_back("finite_invariants (assumed)",
                            file.finite_invariants ? "true" : "false");

  {
    CheckResult check;
    check.name = "excess rank equals dim B";
    check.pass = scenario.excess_rank == scenario.dim_b;
    report.checks.push_back(std::move(check));
  }
  {
    CheckResult check;
    check.name = "canonical character identity";
    try {
      auto cert = canonical_char_check(scenario);
      check.pass = true;
      std::istringstream lines(cert.to_string());
      for (std::string line; std::getline(lines, line);)
        check.details.push_back(line);
    } catch (const CheckFailed& err) {
      check.pass = false;
      check.details.push_back(err.what());
    }
    report.checks.push_back(std::move(check));
  }
  if (scenario.first.kind == LagrangianDescriptor::Kind::Graph ||
      scenario.second.kind == LagrangianDescriptor::Kind::Graph) {
    CheckResult check;
    check.name = "hessian 2-torsion certificate";
    try {
      auto cert = hessian_torsion_check(scenario);
      check.pass = true;
      check.details.push_back("rank " + std::to_string(cert.rank) + " = codim " +
                              std::to_string(cert.codim) + ", det N " +
                              cert.det_normal.to_string());
      for (const auto& row : cert.hessian_rows) check.details.push_back(row);
    } catch (const DegenerateHessian& err) {
      check.pass = false;
      check.details.push_back(err.what());
    }
    report.checks.push_back(std::move(check));
  }

  OracleReport oracle = compare_with_oracle(scenario, window);
  for (const auto& cmp : oracle.comparisons) {
    CheckResult check;
    check.name = cmp.name;
    check.pass = cmp.match;
    check.details = cmp.mismatches;
    report.checks.push_back(std::move(check));
  }
  report.bigraded_tables.emplace_back("derived_tensor", oracle.derived_table);
  if (oracle.moment_table)
    report.bigraded_tables.emplace_back("moment_tensor", *oracle.moment_table);
  report.total_tables.emplace_back("closed_form_ext", oracle.closed_form);
  if (oracle.equivariant)
    report.total_tables.emplace_back("equivariant_ext", *oracle.equivariant);

  compare_expected_table(report, file.expected, "derived_tensor", oracle.derived_table);
  if (oracle.moment_table)
    compare_expected_table(report, file.expected, "moment_tensor", *oracle.moment_table);
  compare_expected_table(report, file.expected, "closed_form_ext", oracle.closed_form);
  if (oracle.equivariant)
    compare_expected_table(report, file.expected, "equivariant_ext",
                           *oracle.equivariant);
}

// ---------------------------------------------------------------------------
// kirwan pipeline

void run_kirwan_rep(const ScenarioFile& file, const TorusRepresentation& rep,
                    const std::string& label, size_t truncation,
                    ScenarioReport& report) {
  auto locus = semistable_locus(rep);
  report.notes.emplace_back(label + " semistable locus", locus.description);
  if (file.expected.contains(label + "_semistable")) {
    CheckResult check;
    check.name = label + " semistable locus matches expected";
    std::string expected =
        file.expected.at(label + "_semistable").get<std::string>();
    check.pass = locus.description == expected;
    if (!check.pass)
      check.details.push_back("computed '" + locus.description + "', expected '" +
                              expected + "'");
    report.checks.push_back(std::move(check));
  }

  auto strata = hkkn_stratification(rep);
  {
    // partition invariant: every unstable support in exactly one stratum
    CheckResult check;
    check.name = label + " stratification partitions the unstable supports";
    check.pass = true;
    size_t assigned = 0;
    for (const auto& s : strata) {
      assigned += s.supports.size();
      if (s.supports.empty()) check.pass = false;
    }
    size_t unstable = 0;
    for (unsigned long mask = 0; mask < (1ul << rep.coords()); ++mask) {
      std::vector<size_t> support;
      for (size_t i = 0; i < rep.coords(); ++i)
        if (mask & (1ul << i)) support.push_back(i);
      bool semistable = true;
      for (const auto& v : optimal_destabilizer(rep, support))
        if (v != 0) semistable = false;
      if (!semistable) ++unstable;
    }
    if (assigned != unstable) check.pass = false;
    check.details.push_back(std::to_string(strata.size()) + " strata covering " +
                            std::to_string(assigned) + " unstable supports");
    report.checks.push_back(std::move(check));
  }
  {
    CheckResult check;
    check.name = label + " Atiyah-Bott certificates";
    check.pass = true;
    for (const auto& s : strata) {
      try {
        auto cert = atiyah_bott_certificate(rep, s);
        std::string line = "beta (";
        for (size_t i = 0; i < s.beta_primitive.size(); ++i)
          line += (i ? "," : "") + s.beta_primitive[i].str();
        line += "): r_beta " + std::to_string(s.codim) + ", normal pairings";
        for (const auto& [idx, p] : cert.normal_pairings)
          line += " <" + rep.coordinate_name(idx) + "," + rational_to_string(p) + ">";
        check.details.push_back(line);
      } catch (const CertificateFailed& err) {
        check.pass = false;
        check.details.push_back(err.what());
      }
    }
    if (strata.empty()) check.details.push_back("no unstable strata (vacuous)");
    report.checks.push_back(std::move(check));
  }
  MorseReport morse = morse_equality_check(rep, truncation);
  report.series.emplace_back(label + " residual P(M^ss) coefficients",
                             morse.residual_coefficients);
  report.notes.emplace_back(label + " residual P(M^ss)", morse.residual.to_string());
  for (const auto& s : strata) {
    std::string key = label + " stratum beta (";
    for (size_t i = 0; i < s.beta_primitive.size(); ++i)
      key += (i ? "," : "") + s.beta_primitive[i].str();
    key += ")";
    report.notes.emplace_back(key + " series",
                              stratum_poincare_series(rep, s).to_string());
  }
  {
    CheckResult check;
    check.name = label + " Morse equality to t^" + std::to_string(truncation);
    check.pass = morse.identity_holds && morse.residual_nonnegative;
    if (!morse.identity_holds) check.details.push_back("truncated identity fails");
    if (!morse.residual_nonnegative)
      check.details.push_back("residual has a negative coefficient");
    report.checks.push_back(std::move(check));
  }
  if (file.expected.contains(label + "_residual")) {
    CheckResult check;
    check.name = label + " residual matches the known model";
    check.pass = true;
    const auto& coeffs = file.expected.at(label + "_residual");
    for (size_t k = 0; k < morse.residual_coefficients.size(); ++k) {
      Rational expected(0);
      if (k < coeffs.size())
        expected = parse_rational(coeffs.at(k).get<std::string>());
      if (morse.residual_coefficients[k] != expected) {
        check.pass = false;
        check.details.push_back("t^" + std::to_string(k) + ": computed " +
                                rational_to_string(morse.residual_coefficients[k]) +
                                ", expected " + rational_to_string(expected));
      }
    }
    report.checks.push_back(std::move(check));
  }
}

void run_kirwan(const ScenarioFile& file, size_t truncation, ScenarioReport& report) {
  const json& body = file.body;
  TorusRepresentation rep;
  rep.rank = body.value("rank", 1);
  for (const auto& w : body.at("weights"))
    rep.weights.push_back(w.get<std::vector<int>>());
  rep.linearization = body.at("linearization").get<std::vector<int>>();
  if (body.contains("names")) rep.names = body.at("names").get<std::vector<std::string>>();
  for (const auto& w : rep.weights)
    if (static_cast<int>(w.size()) != rep.rank)
      throw ScenarioParseError("weight vector length disagrees with the rank");
  run_kirwan_rep(file, rep, "base", truncation, report);
  if (body.value("cotangent", false))
    run_kirwan_rep(file, rep.cotangent_lift(), "cotangent", truncation, report);
}

// ---------------------------------------------------------------------------
// localsys pipeline

void run_localsys(const ScenarioFile& file, ScenarioReport& report) {
  const json& body = file.body;
  size_t vertices = body.at("vertices").get<size_t>();
  std::vector<std::vector<int>> simplices;
  for (const auto& s : body.at("simplices"))
    simplices.push_back(s.get<std::vector<int>>());
  SimplicialModel model = SimplicialModel::build(vertices, simplices);
  MonodromyData monodromy;
  monodromy.order = body.at("monodromy").at("order").get<unsigned>();
  for (const auto& e : body.at("monodromy").at("edges")) {
    int a = e.at(0).get<int>(), b = e.at(1).get<int>();
    long exp = e.at(2).get<long>();
    if (a > b) std::swap(a, b);
    exp %= static_cast<long>(monodromy.order);
    if (exp < 0) exp += monodromy.order;
    if (exp != 0) monodromy.edge_exponent[{a, b}] = exp;
  }
  check_cocycle(model, monodromy); // NotACocycle -> validation error
  unsigned n = body.value("cover_order", monodromy.order);

  report.notes.emplace_back("euler characteristic",
                            std::to_string(model.euler_characteristic()));
  auto dims = twisted_cohomology(model, monodromy);
  std::vector<Rational> dims_row;
  for (size_t d : dims) dims_row.emplace_back(static_cast<long>(d));
  report.series.emplace_back("twisted cohomology dims", dims_row);

  auto cover_report = covering_decomposition_check(model, monodromy, n);
  std::vector<Rational> cover_row;
  for (size_t d : cover_report.cover_dims) cover_row.emplace_back(static_cast<long>(d));
  report.series.emplace_back("cover cohomology dims", cover_row);
  {
    CheckResult check;
    check.name = "covering decomposition (cover vs sum of twisted powers)";
    check.pass = cover_report.match;
    for (size_t q = 0; q < cover_report.cover_dims.size(); ++q)
      check.details.push_back("degree " + std::to_string(q) + ": cover " +
                              std::to_string(cover_report.cover_dims[q]) + " = sum " +
                              std::to_string(cover_report.twisted_sums[q]));
    report.checks.push_back(std::move(check));
  }
  if (file.expected.contains("twisted")) {
    CheckResult check;
    check.name = "expected twisted dims";
    check.pass = true;
    const auto& expected = file.expected.at("twisted");
    for (size_t q = 0; q < dims.size(); ++q) {
      size_t want = q < expected.size()
                        ? std::stoul(expected.at(q).get<std::string>())
                        : 0;
      if (dims[q] != want) {
        check.pass = false;
        check.details.push_back("degree " + std::to_string(q) + ": computed " +
                                std::to_string(dims[q]) + ", expected " +
                                std::to_string(want));
      }
    }
    report.checks.push_back(std::move(check));
  }
  if (file.expected.contains("cover")) {
    CheckResult check;
    check.name = "expected cover dims";
    check.pass = true;
    const auto& expected = file.expected.at("cover");
    for (size_t q = 0; q < cover_report.cover_dims.size(); ++q) {
      size_t want = q < expected.size()
                        ? std::stoul(expected.at(q).get<std::string>())
                        : 0;
      if (cover_report.cover_dims[q] != want) {
        check.pass = false;
        check.details.push_back("degree " + std::to_string(q) + ": computed " +
                                std::to_string(cover_report.cover_dims[q]) +
                                ", expected " + std::to_string(want));
      }
    }
    report.checks.push_back(std::move(check));
  }
}

} // namespace

ScenarioReport run_scenario(const ScenarioFile& file, const RunOptions& options) {
  ScenarioReport report;
  report.name = file.name;
  report.kind = file.kind;
  Window window = options.window_override.value_or(file.window);
  size_t truncation = options.truncate_override.value_or(file.truncate);
  if (file.kind == "lagrangian_intersection")
    run_lagrangian(file, window, report);
  else if (file.kind == "kirwan")
    run_kirwan(file, truncation, report);
  else if (file.kind == "localsys")
    run_localsys(file, report);
  else
    throw ScenarioParseError("unknown kind '" + file.kind + "'");
  return report;
}

ScenarioReport run_scenario_file(const std::string& path, const RunOptions& options) {
  return run_scenario(ScenarioFile::parse_file(path), options);
}

CorpusResult verify_corpus(const std::string& directory, const RunOptions& options,
                           unsigned jobs) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(directory, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".scn")
      files.push_back(entry.path().string());
  }
  if (ec) throw ScenarioParseError(directory + ": unreadable directory");
  if (files.empty())
    throw ScenarioParseError(directory + ": no scenario files found");
  std::sort(files.begin(), files.end());

  CorpusResult result;
  result.runs.resize(files.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t idx = next.fetch_add(1);
      if (idx >= files.size()) break;
      const std::string& path = files[idx];
      std::string display = fs::path(path).filename().string();
      try {
        result.runs[idx] = {display, run_scenario_file(path, options)};
      } catch (const std::exception& err) {
        ScenarioReport report;
        report.name = display;
        report.kind = "error";
        CheckResult check;
        check.name = "scenario execution";
        check.pass = false;
        check.details.push_back(err.what());
        report.checks.push_back(std::move(check));
        result.runs[idx] = {display, std::move(report)};
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& [file, report] : result.runs) {
    if (report.kind == "error")
      ++result.errors;
    else if (report.pass())
      ++result.passed;
    else
      ++result.failed;
  }
  return result;
}

} // namespace lagint
