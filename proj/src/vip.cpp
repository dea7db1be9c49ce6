#include "sgc/vip.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sgc/convexity.hpp"
#include "sgc/errors.hpp"

namespace sgc {

void MopProblem::validate() const {
  if (objectives.empty()) throw Error(ErrorCode::InvalidArgument, "a multiobjective problem needs at least one objective");
  require_order(order_m);
  const Domain& d0 = objectives.front().domain();
  for (const Function& f : objectives) {
    const Domain& d = f.domain();
    if (!(d.manifold() == d0.manifold()) || d.radius() != d0.radius() || d.center().coords != d0.center().coords) {
      throw Error(ErrorCode::InvalidArgument, "all objectives must share one domain");
    }
  }
}

EvaluationGrid EvaluationGrid::sampled(const Domain& domain, std::size_t n_samples, std::uint64_t seed,
                                       std::vector<Point> pinned) {
  EvaluationGrid grid;
  grid.points = std::move(pinned);
  for (const Point& p : grid.points) domain.require_contains(p);
  grid.points.reserve(grid.points.size() + n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) grid.points.push_back(sample_point(domain, seed, "grid", i));
  return grid;
}

double EvaluationGrid::effective_resolution(const Manifold& m) const {
  if (resolution) return *resolution;
  double worst = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      const double d = m.distance(points[i], points[j]);
      if (d > kDegeneratePairDistance) nearest = std::min(nearest, d);
    }
    if (std::isfinite(nearest)) worst = std::max(worst, nearest);
  }
  return worst;
}

namespace {

std::vector<Tangent> gradients_at(const MopProblem& problem, const Point& xbar) {
  std::vector<Tangent> g;
  g.reserve(problem.objectives.size());
  for (const Function& f : problem.objectives) g.push_back(riemannian_gradient(f, xbar));
  return g;
}

void fill_vip(const MopProblem& problem, const Point& xbar, const EvaluationGrid& grid, VipVerdict& out) {
  const Manifold& m = problem.domain().manifold();
  const auto grads = gradients_at(problem, xbar);
  double strongest = 0.0;
  std::vector<double> pairings(grads.size());
  out.is_vip_solution = true;
  out.witness.reset();
  for (std::size_t j = 0; j < grid.points.size(); ++j) {
    const Point& x = grid.points[j];
    Tangent v;
    try {
      v = m.log(xbar, x);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CutLocus) throw;
      ++out.skipped_cut_locus;
      continue;
    }
    double largest = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grads.size(); ++i) {
      pairings[i] = m.inner(xbar, grads[i], v);
      largest = std::max(largest, pairings[i]);
    }
    if (largest < -grid.guard_eps && (!out.witness || largest < strongest)) {
      strongest = largest;
      out.is_vip_solution = false;
      out.witness = VipWitness{x, j, pairings};
    }
  }
}

void fill_minimizer(const MopProblem& problem, const Point& xbar, const EvaluationGrid& grid, VipVerdict& out) {
  const Manifold& m = problem.domain().manifold();
  std::vector<double> fbar;
  fbar.reserve(problem.objectives.size());
  for (const Function& f : problem.objectives) fbar.push_back(f.value(xbar));

  double c_star = std::numeric_limits<double>::infinity();
  out.c_star_index.reset();
  for (std::size_t j = 0; j < grid.points.size(); ++j) {
    const Point& x = grid.points[j];
    const double d = m.distance(xbar, x);
    if (d < kDegeneratePairDistance) {
      ++out.skipped_degenerate;
      continue;
    }
    const double dm = distance_power(d, problem.order_m);
    double ratio = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < fbar.size(); ++i) {
      ratio = std::max(ratio, (problem.objectives[i].value(x) - fbar[i]) / dm);
    }
    if (ratio < c_star) {
      c_star = ratio;
      out.c_star_index = j;
    }
  }
  if (!out.c_star_index) {
    throw Error(ErrorCode::InvalidArgument, "evaluation grid has no point distinct from the candidate");
  }
  out.c_star = c_star;
  out.is_strict_minimizer = c_star > grid.guard_eps;
}

}  // namespace

VipVerdict vip_check(const MopProblem& problem, const Point& xbar, const EvaluationGrid& grid) {
  problem.validate();
  VipVerdict out;
  fill_vip(problem, xbar, grid, out);
  return out;
}

VipVerdict strict_minimizer_check(const MopProblem& problem, const Point& xbar, const EvaluationGrid& grid) {
  problem.validate();
  problem.domain().require_contains(xbar);
  VipVerdict out;
  fill_minimizer(problem, xbar, grid, out);
  return out;
}

VipVerdict evaluate_candidate(const MopProblem& problem, const Point& xbar, const EvaluationGrid& grid) {
  problem.validate();
  VipVerdict out;
  fill_vip(problem, xbar, grid, out);
  fill_minimizer(problem, xbar, grid, out);
  return out;
}

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::BoundaryStationary: return "boundary_stationary";
    case SolveStatus::MaxIterations: return "max_iterations";
  }
  return "unknown";
}

SolveResult solve_mop_weighted(const MopProblem& problem, const std::vector<double>& weights, const Point& x0,
                               const SolveOptions& options) {
  problem.validate();
  if (weights.size() != problem.objectives.size()) {
    throw Error(ErrorCode::InvalidArgument, "one weight per objective is required");
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::any_of(weights.begin(), weights.end(), [](double w) { return !(w >= 0.0); }) ||
      std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "weights must be non-negative and sum to 1");
  }
  const Domain& domain = problem.domain();
  const Manifold& m = domain.manifold();
  domain.require_contains(x0);

  auto objective = [&](const Point& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] != 0.0) s += weights[i] * problem.objectives[i].value(x);
    }
    return s;
  };
  auto gradient = [&](const Point& x) {
    Tangent g = m.zero(x);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] != 0.0) g.comps += weights[i] * riemannian_gradient(problem.objectives[i], x).comps;
    }
    return g;
  };
  // exp_x(-eta g) if it stays in the ball, nullopt otherwise.
  auto try_step = [&](const Point& x, const Tangent& g, double eta) -> std::optional<Point> {
    try {
      Point y = m.exp(x, Tangent{g.base, -eta * g.comps});
      if (domain.contains(y, 0.0)) return y;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::StepTooLarge && e.code() != ErrorCode::OutOfBall) throw;
    }
    return std::nullopt;
  };

  SolveResult result;
  result.x = x0;
  result.value = objective(x0);
  result.values.push_back(result.value);
  result.status = SolveStatus::MaxIterations;

  for (; result.iterations < options.max_iterations; ++result.iterations) {
    const Tangent g = gradient(result.x);
    const double gnorm = m.norm(result.x, g);
    result.gradient_norm = gnorm;
    if (gnorm <= options.gradient_tol) {
      result.status = SolveStatus::Converged;
      break;
    }
    // Step lengths beyond the domain diameter always leave the ball.
    double eta = std::min(options.initial_step, 2.0 * domain.radius() / gnorm);
    std::optional<Point> y = try_step(result.x, g, eta);
    if (!y) {
      double lo = 0.0;
      double hi = eta;
      for (int k = 0; k < 100; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (try_step(result.x, g, mid)) lo = mid;
        else hi = mid;
      }
      eta = lo;
      y = try_step(result.x, g, eta);
    }
    bool accepted = false;
    while (y && eta > 0.0 && eta * gnorm > 1e-300) {
      const double fy = objective(*y);
      if (fy <= result.value - options.sufficient_decrease * eta * gnorm * gnorm) {
        result.x = *y;
        result.value = fy;
        result.values.push_back(fy);
        accepted = true;
        break;
      }
      eta *= options.shrink;
      if (eta * gnorm < 1e-17) break;
      y = try_step(result.x, g, eta);
    }
    if (!accepted) {
      result.status = SolveStatus::BoundaryStationary;
      break;
    }
  }
  if (result.status == SolveStatus::MaxIterations) {
    result.gradient_norm = m.norm(result.x, gradient(result.x));
    if (result.gradient_norm <= options.gradient_tol) result.status = SolveStatus::Converged;
  }
  return result;
}

Thm41Report thm41_harness(const MopProblem& problem, const EvaluationGrid& grid, const std::vector<Point>& candidates) {
  problem.validate();
  const Manifold& m = problem.domain().manifold();
  Thm41Report report;
  report.resolution = grid.effective_resolution(m);
  report.candidates.reserve(candidates.size());
  for (const Point& x : candidates) {
    const VipVerdict v = evaluate_candidate(problem, x, grid);
    report.candidates.push_back(CandidateOutcome{x, v.is_vip_solution, v.is_strict_minimizer, v.c_star, false});
  }
  const double band = 2.0 * report.resolution;
  auto& cs = report.candidates;
  for (std::size_t j = 0; j < cs.size(); ++j) {
    for (std::size_t k = 0; k < cs.size() && !cs[j].boundary; ++k) {
      if (k != j && cs[k].is_vip_solution != cs[j].is_vip_solution && m.distance(cs[j].x, cs[k].x) <= band) {
        cs[j].boundary = true;
      }
    }
  }
  std::size_t counted = 0;
  std::size_t agreeing = 0;
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (cs[j].boundary) {
      ++report.n_boundary;
      continue;
    }
    ++counted;
    if (cs[j].is_vip_solution == cs[j].is_strict_minimizer) ++agreeing;
    else report.disagreements.push_back(j);
  }
  report.agreement_rate = counted == 0 ? 1.0 : static_cast<double>(agreeing) / static_cast<double>(counted);
  return report;
}

}  // namespace sgc
