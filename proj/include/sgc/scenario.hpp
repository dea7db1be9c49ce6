#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sgc/convexity.hpp"
#include "sgc/monotonicity.hpp"
#include "sgc/vip.hpp"

namespace sgc {

inline constexpr std::string_view kVersion = "1.0.0";

enum class CheckKind { Convexity, FirstOrder, Monotone, Pseudomonotone, Vip, Thm31, Thm32, Thm41 };

std::string_view to_string(CheckKind kind);

/// All problems found while validating a config, in document order.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// Command-line values that take precedence over the config.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
};

/// A validated config with every catalog reference resolved.
struct Scenario {
  std::string name;
  CheckKind check = CheckKind::Convexity;
  double order_m = 2.0;
  std::optional<double> c;
  std::optional<double> beta;
  std::optional<Function> function;
  std::optional<Field> field;
  std::optional<MopProblem> problem;
  std::optional<Point> xbar;
  std::vector<Point> candidates;
  EvaluationGrid grid;
  SamplingPlan plan;
  std::optional<std::string> output;
  /// The config as run, with overrides applied.
  nlohmann::json echo;
};

/// Throws ConfigError listing every problem found.
Scenario parse_scenario(const nlohmann::json& config, const Overrides& overrides = {});

/// Runs the check and builds the report. Library errors propagate.
nlohmann::json run_check(const Scenario& scenario);

/// Exit codes of the check command.
enum ExitCode : int { kExitPass = 0, kExitNegative = 1, kExitInvalidConfig = 2, kExitNumerical = 3 };

struct RunOutcome {
  int exit_code = kExitPass;
  /// Empty unless the check ran.
  nlohmann::json report;
  std::vector<std::string> problems;
  std::optional<std::string> output;
};

/// parse + run, with every failure mapped to an exit code.
RunOutcome run_scenario(const nlohmann::json& config, const Overrides& overrides = {});

/// Reads the config file first; unreadable or malformed JSON exits 2.
RunOutcome run_scenario_file(const std::filesystem::path& path, const Overrides& overrides = {});

/// A copy of the report without runtime_ms fields, for reproducibility checks.
nlohmann::json strip_runtime(nlohmann::json report);

/// One line of CSV per report, with a header.
std::string report_csv(const nlohmann::json& report);

/// Manifolds, function presets, field kinds and check kinds known to the tool.
nlohmann::json catalog_listing();

nlohmann::json to_json(const Point& p);
nlohmann::json to_json(const Witness& w);

}  // namespace sgc
