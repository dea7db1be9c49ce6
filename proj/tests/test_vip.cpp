#include <gtest/gtest.h>

#include <cmath>

#include "sgc/catalog.hpp"
#include "sgc/errors.hpp"
#include "sgc/vip.hpp"

using namespace sgc;

namespace {

Point p1(double a) { return Point{(Vec(1) << a).finished()}; }

EvaluationGrid line_grid(double step) {
  EvaluationGrid g;
  g.points = catalog::line_points(step);
  return g;
}

MopProblem scaled(const MopProblem& p, double lambda) {
  MopProblem out{{}, p.order_m};
  for (const Function& f : p.objectives) out.objectives.push_back(f.scaled(lambda));
  return out;
}

}  // namespace

TEST(VipCheck, LineExamples) {
  const MopProblem prob = catalog::line_biobjective(2.0);
  const EvaluationGrid grid = line_grid(0.1);

  for (double xbar : {-1.0, -0.3, 0.0, 0.5, 1.0}) {
    const VipVerdict v = vip_check(prob, p1(xbar), grid);
    EXPECT_TRUE(v.is_vip_solution) << xbar;
    EXPECT_FALSE(v.witness);
  }

  const VipVerdict out = vip_check(prob, p1(1.5), grid);
  ASSERT_FALSE(out.is_vip_solution);
  ASSERT_TRUE(out.witness);
  // Largest pairing most negative: x = -2, pairings (1 * -3.5, 5 * -3.5).
  EXPECT_NEAR(out.witness->x.coords[0], -2.0, 1e-12);
  EXPECT_NEAR(out.witness->pairings[0], -3.5, 1e-12);
  EXPECT_NEAR(out.witness->pairings[1], -17.5, 1e-12);
}

TEST(VipCheck, SingleViolatorWitness) {
  // With only x = 1 to the left of xbar the witness must be x = 1, with
  // pairings grad f_i(1.5) * (1 - 1.5) = (-0.5, -2.5).
  const MopProblem prob = catalog::line_biobjective(2.0);
  EvaluationGrid grid;
  grid.points = {p1(1.5), p1(1.0), p1(1.8), p1(2.0)};
  const VipVerdict v = vip_check(prob, p1(1.5), grid);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->grid_index, 1u);
  EXPECT_NEAR(v.witness->pairings[0], -0.5, 1e-12);
  EXPECT_NEAR(v.witness->pairings[1], -2.5, 1e-12);
}

TEST(StrictMinimizer, LineExamples) {
  const MopProblem prob = catalog::line_biobjective(2.0);
  const EvaluationGrid grid = line_grid(0.1);

  // c*(0) = inf (1 + 2/|x|) = 2 at |x| = 2.
  const VipVerdict at0 = strict_minimizer_check(prob, p1(0.0), grid);
  EXPECT_NEAR(at0.c_star, 2.0, 1e-9);
  EXPECT_TRUE(at0.is_strict_minimizer);

  // c*(1) = inf max(1, (x+3)/(x-1)) = 1.
  const VipVerdict at1 = strict_minimizer_check(prob, p1(1.0), grid);
  EXPECT_NEAR(at1.c_star, 1.0, 1e-9);
  EXPECT_TRUE(at1.is_strict_minimizer);

  const VipVerdict at15 = strict_minimizer_check(prob, p1(1.5), grid);
  EXPECT_LE(at15.c_star, -1.0);
  EXPECT_FALSE(at15.is_strict_minimizer);
  ASSERT_TRUE(at15.c_star_index);
}

TEST(StrictMinimizer, SkipsTheCandidateItself) {
  const MopProblem prob = catalog::line_biobjective(2.0);
  EvaluationGrid grid;
  grid.points = {p1(0.0), p1(2.0)};
  const VipVerdict v = strict_minimizer_check(prob, p1(0.0), grid);
  EXPECT_EQ(v.skipped_degenerate, 1u);
  EXPECT_EQ(*v.c_star_index, 1u);
}

TEST(MopProblem, Validation) {
  MopProblem empty{{}, 2.0};
  EXPECT_THROW(empty.validate(), Error);
  MopProblem bad = catalog::line_biobjective(0.5);
  EXPECT_THROW(bad.validate(), Error);
  MopProblem mixed = catalog::line_biobjective(2.0);
  mixed.objectives.push_back(catalog::function_preset("euclid2_sqnorm").function);
  EXPECT_THROW(mixed.validate(), Error);
}

TEST(Solver, LineWeights) {
  const MopProblem prob = catalog::line_biobjective(2.0);
  const SolveResult mid = solve_mop_weighted(prob, {0.5, 0.5}, p1(1.7));
  EXPECT_EQ(mid.status, SolveStatus::Converged);
  EXPECT_NEAR(mid.x.coords[0], 0.0, 1e-6);

  const SolveResult left = solve_mop_weighted(prob, {1.0, 0.0}, p1(-2.0));
  EXPECT_EQ(left.status, SolveStatus::Converged);
  EXPECT_NEAR(left.x.coords[0], 1.0, 1e-6);
}

TEST(Solver, PoincareConvergesToAnchor) {
  const auto bi = catalog::poincare_biobjective();
  const Manifold& m = bi.problem.domain().manifold();
  const SolveResult r = solve_mop_weighted(bi.problem, {1.0, 0.0}, bi.b);
  EXPECT_EQ(r.status, SolveStatus::Converged);
  EXPECT_LE(m.distance(r.x, bi.a), 1e-6);
}

TEST(Solver, ObjectiveDecreasesEveryStep) {
  const auto bi = catalog::poincare_biobjective();
  for (const Point& x0 : sample_domain(bi.problem.domain(), 10, 4)) {
    for (double w : {0.0, 0.3, 0.7, 1.0}) {
      const SolveResult r = solve_mop_weighted(bi.problem, {w, 1.0 - w}, x0);
      for (std::size_t i = 1; i < r.values.size(); ++i) EXPECT_LE(r.values[i], r.values[i - 1]);
      EXPECT_TRUE(bi.problem.domain().contains(r.x));
    }
  }
}

TEST(Solver, RejectsBadWeights) {
  const MopProblem prob = catalog::line_biobjective(2.0);
  EXPECT_THROW(solve_mop_weighted(prob, {1.0}, p1(0.0)), Error);
  EXPECT_THROW(solve_mop_weighted(prob, {-1.0, 2.0}, p1(0.0)), Error);
  EXPECT_THROW(solve_mop_weighted(prob, {0.0, 0.0}, p1(0.0)), Error);
}

TEST(Thm41, LineHarness) {
  for (double step : {0.1, 0.05}) {
    const MopProblem prob = catalog::line_biobjective(2.0);
    const EvaluationGrid grid = line_grid(step);
    const Thm41Report r = thm41_harness(prob, grid, grid.points);
    EXPECT_EQ(r.agreement_rate, 1.0) << step;
    EXPECT_TRUE(r.disagreements.empty());
    EXPECT_NEAR(r.resolution, step, 1e-12);
    for (const CandidateOutcome& c : r.candidates) {
      const double x = c.x.coords[0];
      EXPECT_EQ(c.is_vip_solution, std::abs(x) <= 1.0 + 1e-12) << x;
    }
    // Only the points straddling +-1 sit next to an opposite verdict.
    EXPECT_EQ(r.n_boundary, 2u * 4u) << step;
  }
}

TEST(Thm41, SingleObjective) {
  const Domain line = catalog::line_biobjective(2.0).domain();
  const MopProblem prob{{Function::dist_power(line, p1(0.4), 2.0)}, 2.0};
  EvaluationGrid grid = line_grid(0.1);
  grid.points.push_back(p1(0.4));
  for (const Point& x : grid.points) {
    const VipVerdict v = evaluate_candidate(prob, x, grid);
    const bool at_base = std::abs(x.coords[0] - 0.4) < 1e-12;
    EXPECT_EQ(v.is_vip_solution, at_base) << x.coords[0];
    EXPECT_EQ(v.is_strict_minimizer, at_base) << x.coords[0];
    if (at_base) EXPECT_NEAR(v.c_star, 1.0, 1e-9);
  }
}

// Properties

TEST(VipProperties, CStarScalesWithObjectives) {
  const MopProblem prob = catalog::line_biobjective(2.0);
  const MopProblem big = scaled(prob, 3.0);
  const EvaluationGrid grid = line_grid(0.1);
  for (const Point& x : grid.points) {
    const double c = strict_minimizer_check(prob, x, grid).c_star;
    const double c3 = strict_minimizer_check(big, x, grid).c_star;
    EXPECT_NEAR(c3, 3.0 * c, 1e-9 * std::max(1.0, std::abs(3.0 * c)));
    EXPECT_EQ(vip_check(prob, x, grid).is_vip_solution, vip_check(big, x, grid).is_vip_solution);
  }
}

TEST(VipProperties, PoincareAgreementAwayFromBoundary) {
  const auto bi = catalog::poincare_biobjective();
  const Manifold& m = bi.problem.domain().manifold();
  std::vector<Point> pinned;
  for (int i = 0; i <= 20; ++i) pinned.push_back(m.geodesic_point(bi.a, bi.b, i / 20.0));
  const EvaluationGrid grid = EvaluationGrid::sampled(bi.problem.domain(), 1500, 42, pinned);
  std::vector<Point> candidates(pinned.begin(), pinned.end());
  for (const Point& x : sample_domain(bi.problem.domain(), 40, 7)) candidates.push_back(x);
  const Thm41Report r = thm41_harness(bi.problem, grid, candidates);
  EXPECT_GE(r.agreement_rate, 0.95);
  // Points on the geodesic between the anchors are Pareto optimal.
  for (int i = 0; i <= 20; ++i) EXPECT_TRUE(r.candidates[static_cast<std::size_t>(i)].is_vip_solution) << i;
}

TEST(VipProperties, EffectiveResolutionOfUniformLine) {
  EXPECT_NEAR(line_grid(0.25).effective_resolution(catalog::line_biobjective(2.0).domain().manifold()), 0.25, 1e-12);
  EvaluationGrid g = line_grid(0.25);
  g.resolution = 0.7;
  EXPECT_EQ(g.effective_resolution(catalog::line_biobjective(2.0).domain().manifold()), 0.7);
}
