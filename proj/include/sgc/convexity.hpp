#pragma once

#include <optional>

#include "sgc/function.hpp"
#include "sgc/sampling.hpp"

namespace sgc {

/// Strong geodesic convexity of order m:
///
///   f(gamma_xy(t)) <= (1-t) f(x) + t f(y) - c t(1-t) d(x,y)^m
///
/// sampled over unordered pairs and interior t nodes. With c given the verdict
/// is PASS/FAIL for that c (c = 0 is plain geodesic convexity). Without c the
/// inequality is tested at c = 0 and the verdict is FAIL (not convex),
/// PASS (estimated modulus > guard_eps) or DEGENERATE (convex, modulus within
/// the guard band). The estimated modulus is always the sampled infimum
///
///   c* = inf [(1-t) f(x) + t f(y) - f(gamma_xy(t))] / [t(1-t) d(x,y)^m].
///
/// Pairs closer than 1e-10 are skipped (skipped_degenerate), as are pairs on
/// the cut locus (skipped_cut_locus).
CheckReport check_strong_gconvex(const Function& f, double order_m, std::optional<double> c,
                                 const SamplingPlan& plan);

/// First-order characterization on ordered pairs:
///
///   f(y) >= f(x) + <grad f(x), log_x y>_x + c d(x,y)^m
///
/// with c* = inf [f(y) - f(x) - <grad f(x), log_x y>_x] / d(x,y)^m.
/// Verdict logic mirrors check_strong_gconvex.
CheckReport check_first_order(const Function& f, double order_m, std::optional<double> c, const SamplingPlan& plan);

struct Thm31Report {
  CheckReport zeroth;
  CheckReport first;
  double c_zeroth = 0.0;
  double c_first = 0.0;
  /// (c_zeroth > guard_eps) == (c_first > guard_eps)
  bool agree = false;
};

/// Runs both characterizations on the same plan and compares their verdicts.
Thm31Report thm31_harness(const Function& f, double order_m, const SamplingPlan& plan);

/// d^m, exact for m = 1, 2.
double distance_power(double d, double order_m);

void require_order(double order_m);

}  // namespace sgc
