#include "lagint/scenario_file.hpp"

#include <fstream>
#include <sstream>

namespace lagint {

using nlohmann::json;

ScenarioFile ScenarioFile::parse_text(const std::string& text,
                                      const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ScenarioParseError(origin + ": " + err.what());
  }
  ScenarioFile out;
  try {
    if (!doc.is_object()) throw ScenarioParseError(origin + ": top level must be an object");
    out.kind = doc.at("kind").get<std::string>();
    if (out.kind != "lagrangian_intersection" && out.kind != "kirwan" &&
        out.kind != "localsys")
      throw ScenarioParseError(origin + ": unknown kind '" + out.kind + "'");
    out.name = doc.value("name", origin);
    if (doc.contains("window")) {
      const auto& w = doc.at("window");
      long hom = w.value("homological", 4l);
      out.window.homological_min = static_cast<int>(hom > 0 ? -hom : hom);
      out.window.internal_max = w.value("internal", 10l);
    }
    out.truncate = doc.value("truncate", 20u);
    if (doc.contains("flags")) {
      const auto& f = doc.at("flags");
      out.proper_over_affine = f.value("proper_over_affine", false);
      out.finite_invariants = f.value("finite_invariants", false);
    }
    out.body = doc.at("body");
    if (doc.contains("expected")) out.expected = doc.at("expected");
  } catch (const ScenarioParseError&) {
    throw;
  } catch (const json::exception& err) {
    throw ScenarioParseError(origin + ": " + err.what());
  }
  return out;
}

ScenarioFile ScenarioFile::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_text(buffer.str(), path);
}

} // namespace lagint
