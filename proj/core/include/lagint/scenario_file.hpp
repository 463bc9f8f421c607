#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lagint/tables.hpp"

namespace lagint {

struct ScenarioParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parsed scenario file: a JSON-compatible structured-text document with a
/// top-level kind discriminator.
struct ScenarioFile {
  std::string kind; // lagrangian_intersection | kirwan | localsys
  std::string name;
  Window window;
  size_t truncate = 20;
  bool proper_over_affine = false;
  bool finite_invariants = false;
  nlohmann::json body;
  nlohmann::json expected; // optional reference values

  static ScenarioFile parse_text(const std::string& text, const std::string& origin);
  static ScenarioFile parse_file(const std::string& path);
};

} // namespace lagint
