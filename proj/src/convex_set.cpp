#include "sgc/convex_set.hpp"

#include <chrono>

#include "sgc/errors.hpp"

namespace sgc {

CheckReport check_geodesic_convex_set(const MemberPredicate& member, const Domain& domain, std::size_t samples,
                                      std::size_t t_grid, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  SamplingPlan plan;
  plan.n_pairs = samples;
  plan.t_grid = t_grid;
  plan.seed = seed;
  plan.validate();

  const Manifold& m = domain.manifold();
  const auto ts = t_nodes(t_grid);
  CheckReport report;
  report.seed = seed;
  for (const auto& [x, y] : sample_pairs(domain, plan)) {
    if (!member(x) || !member(y)) continue;
    try {
      for (double t : ts) {
        Point p = m.geodesic_point(x, y, t);
        ++report.n_evaluated;
        if (!member(p)) {
          report.verdict = Verdict::Fail;
          report.witness = Witness{x, y, t, 0.0, 1.0, -1.0};
          break;
        }
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CutLocus) throw;
      ++report.skipped_cut_locus;
    }
    if (report.verdict == Verdict::Fail) break;
  }
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace sgc
