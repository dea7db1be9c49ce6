#include "sgc/sampling.hpp"

#include <cmath>

#include "sgc/errors.hpp"

namespace sgc {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Degenerate: return "DEGENERATE";
  }
  return "UNKNOWN";
}

void SamplingPlan::validate() const {
  if (n_pairs < 1 && pinned_pairs.empty()) throw Error(ErrorCode::InvalidArgument, "n_pairs must be >= 1");
  if (t_grid < 1) throw Error(ErrorCode::InvalidArgument, "t_grid must be >= 1");
  if (!(guard_eps > 0.0) || !std::isfinite(guard_eps)) {
    throw Error(ErrorCode::InvalidArgument, "guard_eps must be positive");
  }
}

std::vector<std::pair<Point, Point>> sample_pairs(const Domain& domain, const SamplingPlan& plan) {
  std::vector<std::pair<Point, Point>> pairs = plan.pinned_pairs;
  pairs.reserve(plan.pinned_pairs.size() + plan.n_pairs);
  for (std::size_t i = 0; i < plan.n_pairs; ++i) {
    pairs.emplace_back(sample_point(domain, plan.seed, "pairs.x", i), sample_point(domain, plan.seed, "pairs.y", i));
  }
  return pairs;
}

std::vector<double> t_nodes(std::size_t t_grid) {
  std::vector<double> t(t_grid);
  for (std::size_t i = 0; i < t_grid; ++i) t[i] = static_cast<double>(i + 1) / static_cast<double>(t_grid + 1);
  return t;
}

}  // namespace sgc
