#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lagint/runner.hpp"

namespace {

using lagint::ReportFormat;

int emit(const std::string& text, const std::string& report_path) {
  if (report_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(report_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write report to " << report_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

ReportFormat parse_format(const std::string& name) {
  if (name == "machine") return ReportFormat::Machine;
  return ReportFormat::Table;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of derived Lagrangian intersection formulas"};
  app.require_subcommand(1);

  std::string scenario_path, corpus_dir, format = "table", report_path, window_arg;
  long truncate_arg = -1;
  unsigned jobs = 1;

  auto* run = app.add_subcommand("run", "run one scenario file");
  run->add_option("file", scenario_path, "scenario file (.scn)")->required();
  run->add_option("--window", window_arg,
                  "K,D: homological depth K and internal degree bound D");
  run->add_option("--truncate", truncate_arg, "series truncation degree");
  run->add_option("--format", format, "table|machine");
  run->add_option("--report", report_path, "write the report to a file");

  auto* verify = app.add_subcommand("verify", "run every scenario in a directory");
  verify->add_option("dir", corpus_dir, "corpus directory")->required();
  verify->add_option("--jobs", jobs, "scenario-level parallelism");
  verify->add_option("--format", format, "table|machine");
  verify->add_option("--report", report_path, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  lagint::RunOptions options;
  if (!window_arg.empty()) {
    auto comma = window_arg.find(',');
    if (comma == std::string::npos) {
      std::cerr << "--window expects K,D\n";
      return 2;
    }
    lagint::Window w;
    try {
      long k = std::stol(window_arg.substr(0, comma));
      w.homological_min = static_cast<int>(k > 0 ? -k : k);
      w.internal_max = std::stol(window_arg.substr(comma + 1));
    } catch (const std::exception&) {
      std::cerr << "--window expects integers K,D\n";
      return 2;
    }
    options.window_override = w;
  }
  if (truncate_arg >= 0) options.truncate_override = static_cast<size_t>(truncate_arg);

  try {
    if (run->parsed()) {
      lagint::ScenarioReport report = lagint::run_scenario_file(scenario_path, options);
      int rc = emit(lagint::render_report(report, parse_format(format)), report_path);
      if (rc != 0) return rc;
      return report.pass() ? 0 : 1;
    }
    lagint::CorpusResult corpus = lagint::verify_corpus(corpus_dir, options, jobs);
    int rc = emit(lagint::render_corpus(corpus.runs, parse_format(format)), report_path);
    if (rc != 0) return rc;
    return (corpus.failed + corpus.errors) == 0 ? 0 : 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}
