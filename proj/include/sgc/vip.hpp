#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sgc/function.hpp"
#include "sgc/sampling.hpp"

namespace sgc {

/// minimize (f_1, ..., f_k) over a shared domain ball.
struct MopProblem {
  std::vector<Function> objectives;
  double order_m = 2.0;

  /// k >= 1, identical domains, m >= 1.
  void validate() const;
  const Domain& domain() const { return objectives.front().domain(); }
};

struct EvaluationGrid {
  std::vector<Point> points;
  double guard_eps = kDefaultGuardEps;
  /// Spacing used for BOUNDARY flagging; estimated from the points if absent.
  std::optional<double> resolution;

  /// Pinned points first, then n_samples seeded domain samples (substream "grid").
  static EvaluationGrid sampled(const Domain& domain, std::size_t n_samples, std::uint64_t seed,
                                std::vector<Point> pinned = {});

  /// Largest nearest-neighbour distance among the points.
  double effective_resolution(const Manifold& m) const;
};

struct VipWitness {
  Point x;
  std::size_t grid_index = 0;
  /// <grad f_i(xbar), log_xbar x>, one per objective.
  std::vector<double> pairings;
};

struct VipVerdict {
  bool is_vip_solution = true;
  std::optional<VipWitness> witness;
  /// inf over grid x != xbar of max_i [f_i(x) - f_i(xbar)] / d(xbar, x)^m
  double c_star = 0.0;
  std::optional<std::size_t> c_star_index;
  bool is_strict_minimizer = false;
  std::size_t skipped_cut_locus = 0;
  std::size_t skipped_degenerate = 0;
};

/// xbar solves the variational inequality iff no grid point x makes every
/// pairing <grad f_i(xbar), log_xbar x> < -guard_eps. The witness is the
/// violator whose largest pairing is most negative (lowest index on ties).
VipVerdict vip_check(const MopProblem& problem, const Point& xbar, const EvaluationGrid& grid);

/// xbar is a strict minimizer of order m iff c_star > guard_eps: for any
/// c <= c_star every grid point has some i with f_i(x) >= f_i(xbar) + c d^m.
VipVerdict strict_minimizer_check(const MopProblem& problem, const Point& xbar, const EvaluationGrid& grid);

/// Both checks against the same grid.
VipVerdict evaluate_candidate(const MopProblem& problem, const Point& xbar, const EvaluationGrid& grid);

struct SolveOptions {
  double initial_step = 1.0;
  double shrink = 0.5;
  double sufficient_decrease = 1e-4;
  double gradient_tol = 1e-8;
  std::size_t max_iterations = 10000;
};

enum class SolveStatus { Converged, BoundaryStationary, MaxIterations };

std::string_view to_string(SolveStatus s);

struct SolveResult {
  Point x;
  double value = 0.0;
  double gradient_norm = 0.0;
  std::size_t iterations = 0;
  SolveStatus status = SolveStatus::Converged;
  /// Scalarized objective after each accepted step, starting with f(x0).
  std::vector<double> values;
};

/// Riemannian gradient descent on sum_i w_i f_i with Armijo backtracking.
/// Steps that would leave the domain ball are shortened to end on its
/// boundary. BoundaryStationary means no admissible step decreases the
/// objective while the gradient is still above tolerance.
SolveResult solve_mop_weighted(const MopProblem& problem, const std::vector<double>& weights, const Point& x0,
                               const SolveOptions& options = {});

struct CandidateOutcome {
  Point x;
  bool is_vip_solution = false;
  bool is_strict_minimizer = false;
  double c_star = 0.0;
  bool boundary = false;
};

struct Thm41Report {
  std::vector<CandidateOutcome> candidates;
  /// Indices of non-boundary candidates whose two verdicts differ.
  std::vector<std::size_t> disagreements;
  std::size_t n_boundary = 0;
  double resolution = 0.0;
  /// Agreeing fraction of the non-boundary candidates (1 if there are none).
  double agreement_rate = 1.0;
};

/// Evaluates both verdicts for every candidate. A candidate is BOUNDARY when
/// another candidate within 2 * resolution has the opposite VIP verdict; such
/// candidates are excluded from the agreement rate.
Thm41Report thm41_harness(const MopProblem& problem, const EvaluationGrid& grid, const std::vector<Point>& candidates);

}  // namespace sgc
