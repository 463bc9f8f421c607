#pragma once

#include <string>
#include <vector>

#include "lagint/rationals.hpp"
#include "lagint/tables.hpp"

namespace lagint {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::vector<std::string> details;
};

/// Everything a scenario run produces: per-check status, dimension tables,
/// series truncations and free-form notes.  The machine rendering and the
/// aligned-table rendering are generated from the same entries, so their
/// numbers agree by construction.
struct ScenarioReport {
  std::string name;
  std::string kind;
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, BigradedDimsTable>> bigraded_tables;
  std::vector<std::pair<std::string, TotalDimsTable>> total_tables;
  std::vector<std::pair<std::string, std::vector<Rational>>> series;
  std::vector<std::pair<std::string, std::string>> notes;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

enum class ReportFormat { Table, Machine };

std::string render_report(const ScenarioReport& report, ReportFormat format);

/// Corpus summary: one block per scenario in sorted file order plus counts.
std::string render_corpus(const std::vector<std::pair<std::string, ScenarioReport>>& runs,
                          ReportFormat format);

} // namespace lagint
