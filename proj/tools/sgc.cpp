// sgc: command-line front end for the geodesic convexity and monotonicity checks.
//
//   sgc check   --config scenario.json [--out report.json] [--seed N] [--samples N] [--format json|csv] [--quiet]
//   sgc suite   [--out DIR] [--seed N] [--samples N] [--inject-failure] [--format json|csv] [--quiet]
//   sgc catalog [--format json|csv]
//
// Exit codes: 0 property holds, 1 negative verdict, 2 invalid config,
// 3 numerical or I/O failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sgc/scenario.hpp"
#include "sgc/suite.hpp"

namespace {

using nlohmann::json;

bool write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << text;
  out.flush();
  return static_cast<bool>(out);
}

int run_check_command(const std::string& config, const std::optional<std::string>& out_path,
                      const sgc::Overrides& overrides, const std::string& format, bool quiet) {
  const sgc::RunOutcome outcome = sgc::run_scenario_file(config, overrides);
  if (outcome.report.is_null()) {
    std::cerr << (outcome.exit_code == sgc::kExitInvalidConfig ? "sgc check: invalid config" : "sgc check: numerical failure")
              << '\n';
    for (const auto& p : outcome.problems) std::cerr << "  " << p << '\n';
    return outcome.exit_code;
  }
  const std::string text = format == "csv" ? sgc::report_csv(outcome.report) : outcome.report.dump(2) + "\n";
  const std::optional<std::string> target = out_path ? out_path : outcome.output;
  if (target) {
    if (!write_text(*target, text)) {
      std::cerr << "sgc check: cannot write report to '" << *target << "'\n";
      return sgc::kExitNumerical;
    }
    if (!quiet) {
      std::cout << outcome.report["check"].get<std::string>() << ": " << outcome.report["verdict"].get<std::string>()
                << " (report: " << *target << ")\n";
    }
  } else {
    std::cout << text;
  }
  return outcome.exit_code;
}

int run_suite_command(const std::string& out_dir, const sgc::SuiteOptions& options, const std::string& format,
                      bool quiet) {
  std::ostringstream log;
  const int code = sgc::run_suite(out_dir, options, log);
  if (code == sgc::kExitNumerical) {
    std::cerr << log.str();
    return code;
  }
  if (!quiet) {
    std::ifstream summary(std::filesystem::path(out_dir) / "summary.csv");
    if (format == "json") {
      json rows = json::array();
      std::string line;
      std::getline(summary, line);
      while (std::getline(summary, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
        if (cells.size() != 6) continue;
        rows.push_back({{"scenario", cells[0]},
                        {"verdict", cells[1]},
                        {"modulus", json::parse(cells[2])},
                        {"expected", json::parse(cells[3])},
                        {"tolerance", json::parse(cells[4])},
                        {"pass", cells[5] == "true"}});
      }
      std::cout << rows.dump(2) << '\n';
    } else {
      std::cout << summary.rdbuf();
    }
  }
  return code;
}

int run_catalog_command(const std::string& format) {
  const json listing = sgc::catalog_listing();
  if (format == "csv") {
    std::cout << "preset,manifold,dim,radius,function,description\n";
    for (const auto& p : listing["presets"]) {
      std::cout << p["name"].get<std::string>() << ',' << p["manifold"].get<std::string>() << ',' << p["dim"] << ','
                << p["radius"].dump() << ',' << p["function"].get<std::string>() << ",\""
                << p["description"].get<std::string>() << "\"\n";
    }
  } else {
    std::cout << listing.dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks of geodesic convexity, monotone vector fields and multiobjective variational inequalities"};
  app.set_version_flag("--version", std::string(sgc::kVersion));
  app.require_subcommand(1);

  std::string format = "json";
  bool quiet = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--quiet", quiet, "Suppress the human-readable summary");
  };
  auto add_sampling = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Seed for every random substream (overrides the config)");
    cmd->add_option("--samples", samples, "Number of sampled pairs or grid points (overrides the config)")
        ->check(CLI::PositiveNumber);
  };

  std::string config;
  std::optional<std::string> check_out;
  CLI::App* check = app.add_subcommand("check", "Run one scenario from a JSON config");
  check->add_option("--config", config, "Scenario config (JSON)")->required();
  check->add_option("--out", check_out, "Report path (default: config 'output', else stdout)");
  add_sampling(check);
  add_common(check);

  std::string suite_out = "sgc-suite";
  bool inject_failure = false;
  CLI::App* suite = app.add_subcommand("suite", "Run the built-in regression battery");
  suite->add_option("--out", suite_out, "Directory for per-scenario reports and summary.csv");
  suite->add_flag("--inject-failure", inject_failure, "Run the quadratic scenario with c = 1.01 to exercise a failing row");
  add_sampling(suite);
  add_common(suite);

  CLI::App* catalog = app.add_subcommand("catalog", "List manifolds, presets, fields and checks");
  catalog->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : sgc::kExitInvalidConfig;
  }

  if (*check) return run_check_command(config, check_out, sgc::Overrides{seed, samples}, format, quiet);
  if (*suite) {
    sgc::SuiteOptions options;
    if (seed) options.seed = *seed;
    if (samples) options.samples = *samples;
    options.inject_failure = inject_failure;
    return run_suite_command(suite_out, options, format, quiet);
  }
  return run_catalog_command(format);
}
