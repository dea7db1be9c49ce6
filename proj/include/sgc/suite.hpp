#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgc/function.hpp"

namespace sgc {

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::size_t samples = 2000;
  /// Runs the Euclidean quadratic row with c = 1.01, above its true modulus.
  bool inject_failure = false;
};

/// One regression row: a headline number compared against its expectation,
/// plus the full report written next to the summary.
struct SuiteRow {
  int criterion = 0;
  std::string scenario;
  std::string verdict;
  double modulus = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  nlohmann::json report;
};

inline constexpr int kSuiteRows = 11;

/// Runs row `criterion` (1..kSuiteRows). Library errors propagate.
SuiteRow run_suite_row(int criterion, const SuiteOptions& options);

/// Runs every row, writes <out_dir>/<scenario>.json per row and
/// <out_dir>/summary.csv. Returns 0 if all rows pass, 1 if any fails, 3 on a
/// numerical or I/O failure (diagnostic on `log`).
int run_suite(const std::filesystem::path& out_dir, const SuiteOptions& options, std::ostream& log);

std::string summary_csv(const std::vector<SuiteRow>& rows);

/// Worst errors of the geometry kernels over n random cases in a domain:
/// exp/log round trip (metric norm), speed deviation of the geodesic
/// (finite differences at t = k/10) and |d(x, gamma(t)) - t d(x, y)|.
struct KernelErrors {
  double round_trip = 0.0;
  double speed = 0.0;
  double segment = 0.0;
};
KernelErrors kernel_errors(const Domain& domain, std::size_t n_cases, std::uint64_t seed);

/// Geodesic polar grid of a 2-dimensional domain: the center plus rings
/// k = 1..rings at radius R k / rings with 6k points each.
std::vector<Point> polar_grid(const Domain& domain, int rings);

/// Exhaustive strong-convexity modulus over all pairs i < j of the points and
/// the interior t nodes.
double grid_modulus(const Function& f, double order_m, const std::vector<Point>& points, std::size_t t_grid);

}  // namespace sgc
