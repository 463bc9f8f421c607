#pragma once

#include <optional>

#include "lagint/report.hpp"
#include "lagint/scenario_file.hpp"

namespace lagint {

struct RunOptions {
  std::optional<Window> window_override;
  std::optional<size_t> truncate_override;
};

/// Dispatches a parsed scenario to the matching module pipeline.  Throws
/// ScenarioParseError or a validation error for malformed input; check
/// mismatches are recorded in the report instead.
ScenarioReport run_scenario(const ScenarioFile& file, const RunOptions& options = {});
ScenarioReport run_scenario_file(const std::string& path, const RunOptions& options = {});

struct CorpusResult {
  std::vector<std::pair<std::string, ScenarioReport>> runs; // sorted by file name
  size_t passed = 0;
  size_t failed = 0;
  size_t errors = 0; // scenarios that threw (reported as failing runs)
};

/// Runs every *.scn file in the directory (sorted), optionally with
/// scenario-level parallelism; output order is fixed by the sorted names.
/// Throws ScenarioParseError when the directory is empty or unreadable.
CorpusResult verify_corpus(const std::string& directory, const RunOptions& options = {},
                           unsigned jobs = 1);

} // namespace lagint
