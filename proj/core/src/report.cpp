#include "lagint/report.hpp"

#include <sstream>

#include <json.hpp>

namespace lagint {

namespace {

using nlohmann::json;

json table_entries(const BigradedDimsTable& t) {
  json out = json::array();
  for (const auto& [key, v] : t.entries)
    out.push_back({std::to_string(key.first), std::to_string(key.second),
                   std::to_string(v)});
  return out;
}

json table_entries(const TotalDimsTable& t) {
  json out = json::array();
  for (const auto& [key, v] : t.entries)
    out.push_back({std::to_string(key.first), std::to_string(key.second),
                   std::to_string(v)});
  return out;
}

json report_json(const ScenarioReport& report) {
  json out;
  out["name"] = report.name;
  out["kind"] = report.kind;
  out["pass"] = report.pass();
  json checks = json::array();
  for (const auto& c : report.checks) {
    json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["details"] = c.details;
    checks.push_back(jc);
  }
  out["checks"] = checks;
  json tables;
  for (const auto& [name, t] : report.bigraded_tables) tables[name] = table_entries(t);
  for (const auto& [name, t] : report.total_tables) tables[name] = table_entries(t);
  out["tables"] = tables;
  json series;
  for (const auto& [name, coeffs] : report.series) {
    json row = json::array();
    for (const auto& c : coeffs) row.push_back(rational_to_string(c));
    series[name] = row;
  }
  out["series"] = series;
  json notes;
  for (const auto& [key, value] : report.notes) notes[key] = value;
  out["notes"] = notes;
  return out;
}

std::string render_table_format(const ScenarioReport& report) {
  std::ostringstream out;
  out << "== scenario " << report.name << " (" << report.kind << ") ==\n";
  for (const auto& [key, value] : report.notes) out << key << ": " << value << "\n";
  for (const auto& [name, t] : report.bigraded_tables)
    out << "\n-- " << name << " --\n" << t.to_string();
  for (const auto& [name, t] : report.total_tables)
    out << "\n-- " << name << " --\n" << t.to_string();
  for (const auto& [name, coeffs] : report.series) {
    out << "\n-- " << name << " --\n[";
    for (size_t i = 0; i < coeffs.size(); ++i)
      out << (i ? ", " : "") << rational_to_string(coeffs[i]);
    out << "]\n";
  }
  out << "\n";
  for (const auto& c : report.checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "\n";
    for (const auto& d : c.details) out << "       " << d << "\n";
  }
  out << (report.pass() ? "result: PASS" : "result: FAIL") << "\n";
  return out.str();
}

} // namespace

std::string render_report(const ScenarioReport& report, ReportFormat format) {
  if (format == ReportFormat::Machine) return report_json(report).dump(2) + "\n";
  return render_table_format(report);
}

std::string render_corpus(const std::vector<std::pair<std::string, ScenarioReport>>& runs,
                          ReportFormat format) {
  if (format == ReportFormat::Machine) {
    json out;
    json scenarios;
    size_t passed = 0;
    for (const auto& [file, report] : runs) {
      scenarios[file] = report_json(report);
      if (report.pass()) ++passed;
    }
    out["scenarios"] = scenarios;
    out["total"] = std::to_string(runs.size());
    out["passed"] = std::to_string(passed);
    out["failed"] = std::to_string(runs.size() - passed);
    return out.dump(2) + "\n";
  }
  std::ostringstream out;
  size_t passed = 0;
  for (const auto& [file, report] : runs) {
    out << "### " << file << "\n" << render_table_format(report) << "\n";
    if (report.pass()) ++passed;
  }
  out << "summary: " << passed << "/" << runs.size() << " scenarios pass\n";
  if (passed != runs.size()) {
    out << "failing:";
    for (const auto& [file, report] : runs)
      if (!report.pass()) out << " " << file;
    out << "\n";
  }
  return out.str();
}

} // namespace lagint
