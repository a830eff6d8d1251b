#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "combsyz/errors.hpp"
#include "combsyz/fourier_motzkin.hpp"
#include "combsyz/grid.hpp"
#include "combsyz/instance_io.hpp"
#include "combsyz/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitParse = 3;

using combsyz::AnalyzeOptions;
using nlohmann::json;

int run_analyze_cmd(const std::string& path, const AnalyzeOptions& options,
                    const std::string& format) {
  const auto instance = combsyz::parse_instance(path);
  const auto report = combsyz::run_analyze(instance, options);
  if (format == "machine") {
    std::cout << combsyz::report_to_json(report).dump(2) << "\n";
  } else {
    combsyz::print_report_table(std::cout, report, options.include_certificate);
  }
  return kExitOk;
}

int run_feasibility_cmd(const std::string& path) {
  const auto instance = combsyz::parse_instance(path);
  const auto catalog = combsyz::build_catalog(instance.curve, instance.pair);
  const auto system = combsyz::build_constraint_system(instance.curve, instance.pair, catalog);
  const auto result = combsyz::decide(system);

  json j;
  j["schema_version"] = 1;
  const bool feasible = result.status == combsyz::FeasibilityResult::Status::Feasible;
  j["status"] = feasible ? "Feasible" : "Infeasible";
  if (feasible) {
    json w = json::array();
    for (const auto& x : result.witness->weights()) w.push_back(combsyz::rat_string(x));
    j["witness"] = w;
  }
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int run_grid_cmd(const std::string& path, std::int64_t denominator) {
  const auto instance = combsyz::parse_instance(path);
  const auto catalog = combsyz::build_catalog(instance.curve, instance.pair);
  const auto witness =
      combsyz::grid_oracle(instance.curve, instance.pair, catalog, denominator);

  json j;
  j["schema_version"] = 1;
  j["denominator"] = denominator;
  j["found"] = witness.has_value();
  if (witness) {
    json w = json::array();
    for (const auto& x : witness->weights()) w.push_back(combsyz::rat_string(x));
    j["witness"] = w;
  }
  std::cout << j.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "combsyz: exact polarized slope-stability analysis of syzygy sheaf data on "
      "comb-like nodal curves"};
  app.require_subcommand(1);

  std::string analyze_file;
  std::string format = "table";
  AnalyzeOptions options;
  std::int64_t oracle_denominator = 0;
  auto* analyze = app.add_subcommand(
      "analyze", "full report: invariants, catalog, feasibility verdict");
  analyze->add_option("file", analyze_file, "instance file (JSON)")->required();
  auto* oracle_opt = analyze->add_option("--oracle-denominator", oracle_denominator,
                                         "cross-check with the grid oracle at this denominator");
  analyze->add_option("--format", format, "table|machine")
      ->check(CLI::IsMember({"table", "machine"}));
  analyze->add_flag("--certificate", options.include_certificate,
                    "show the constraint rows in table output");

  std::string feasibility_file;
  auto* feasibility = app.add_subcommand(
      "feasibility", "feasibility verdict only (status field, exit code 0)");
  feasibility->add_option("file", feasibility_file, "instance file (JSON)")->required();

  std::string grid_file;
  std::int64_t grid_denominator = 0;
  auto* grid = app.add_subcommand("grid", "exhaustive grid search for a witness");
  grid->add_option("file", grid_file, "instance file (JSON)")->required();
  grid->add_option("--denominator", grid_denominator, "grid denominator D (>= n)")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      if (oracle_opt->count() > 0) options.oracle_denominator = oracle_denominator;
      return run_analyze_cmd(analyze_file, options, format);
    }
    if (feasibility->parsed()) return run_feasibility_cmd(feasibility_file);
    if (grid->parsed()) return run_grid_cmd(grid_file, grid_denominator);
  } catch (const combsyz::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const combsyz::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
