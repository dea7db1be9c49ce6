#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sgc/manifold.hpp"

namespace sgc {

inline constexpr double kDefaultGuardEps = 1e-9;
inline constexpr double kDegeneratePairDistance = 1e-10;

struct SamplingPlan {
  std::size_t n_pairs = 2000;
  /// Number of interior nodes i/(t_grid+1), i = 1..t_grid.
  std::size_t t_grid = 9;
  std::uint64_t seed = 42;
  double guard_eps = kDefaultGuardEps;
  /// Evaluated ahead of the random pairs, in order.
  std::vector<std::pair<Point, Point>> pinned_pairs;

  void validate() const;
};

enum class Verdict { Pass, Fail, Degenerate };

std::string_view to_string(Verdict v);

/// A sampled configuration together with the two sides of the tested
/// inequality. gap < 0 means the inequality is violated.
struct Witness {
  Point x;
  Point y;
  std::optional<double> t;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};

struct CheckReport {
  Verdict verdict = Verdict::Pass;
  std::optional<double> estimated_modulus;
  std::optional<Witness> witness;
  std::size_t n_evaluated = 0;
  std::size_t skipped_degenerate = 0;
  std::size_t skipped_cut_locus = 0;
  std::uint64_t seed = 0;
  double runtime_ms = 0.0;
};

/// Pinned pairs first, then plan.n_pairs random pairs. Pair i of the random
/// part comes from substream ("pairs", i), so a longer plan extends a shorter
/// one with the same seed.
std::vector<std::pair<Point, Point>> sample_pairs(const Domain& domain, const SamplingPlan& plan);

/// {i / (t_grid + 1) : i = 1..t_grid}
std::vector<double> t_nodes(std::size_t t_grid);

/// Keeps the most negative gap; on ties the earliest candidate wins.
class WorstGap {
 public:
  void offer(double gap, const auto& make_witness) {
    if (!best_ || gap < best_->gap) best_ = make_witness();
  }
  const std::optional<Witness>& get() const { return best_; }

 private:
  std::optional<Witness> best_;
};

}  // namespace sgc
