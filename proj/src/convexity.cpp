#include "sgc/convexity.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "sgc/errors.hpp"

namespace sgc {

double distance_power(double d, double order_m) {
  if (order_m == 1.0) return d;
  if (order_m == 2.0) return d * d;
  return std::pow(d, order_m);
}

void require_order(double order_m) {
  if (!(order_m >= 1.0) || !std::isfinite(order_m)) throw Error(ErrorCode::InvalidArgument, "order m must be >= 1");
}

namespace {

void require_modulus(std::optional<double> c) {
  if (c && (!(*c >= 0.0) || !std::isfinite(*c))) throw Error(ErrorCode::InvalidArgument, "modulus must be >= 0");
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void finish(CheckReport& report, const WorstGap& worst, double c_min, bool c_given, double guard_eps) {
  if (report.n_evaluated > 0) report.estimated_modulus = c_min;
  const bool violated = worst.get() && worst.get()->gap < -guard_eps;
  if (violated) {
    report.verdict = Verdict::Fail;
    report.witness = worst.get();
  } else if (c_given) {
    report.verdict = Verdict::Pass;
  } else {
    report.verdict = (report.n_evaluated > 0 && c_min > guard_eps) ? Verdict::Pass : Verdict::Degenerate;
  }
}

}  // namespace

CheckReport check_strong_gconvex(const Function& f, double order_m, std::optional<double> c,
                                 const SamplingPlan& plan) {
  const auto start = std::chrono::steady_clock::now();
  require_order(order_m);
  require_modulus(c);
  plan.validate();

  const Manifold& m = f.manifold();
  const double cc = c.value_or(0.0);
  const auto ts = t_nodes(plan.t_grid);

  CheckReport report;
  report.seed = plan.seed;
  WorstGap worst;
  double c_min = std::numeric_limits<double>::infinity();

  for (const auto& [x, y] : sample_pairs(f.domain(), plan)) {
    const double d = m.distance(x, y);
    if (d < kDegeneratePairDistance) {
      ++report.skipped_degenerate;
      continue;
    }
    const double dm = distance_power(d, order_m);
    const double fx = f.value(x);
    const double fy = f.value(y);
    Tangent v;
    try {
      v = m.log(x, y);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CutLocus) throw;
      ++report.skipped_cut_locus;
      continue;
    }
    for (double t : ts) {
      Tangent step{v.base, t * v.comps};
      const double fp = f.value(m.exp(x, step));
      const double chord = (1.0 - t) * fx + t * fy;
      const double weight = t * (1.0 - t) * dm;
      const double rhs = chord - cc * weight;
      const double gap = rhs - fp;
      c_min = std::min(c_min, (chord - fp) / weight);
      worst.offer(gap, [&] { return Witness{x, y, t, fp, rhs, gap}; });
      ++report.n_evaluated;
    }
  }
  finish(report, worst, c_min, c.has_value(), plan.guard_eps);
  report.runtime_ms = elapsed_ms(start);
  return report;
}

CheckReport check_first_order(const Function& f, double order_m, std::optional<double> c, const SamplingPlan& plan) {
  const auto start = std::chrono::steady_clock::now();
  require_order(order_m);
  require_modulus(c);
  plan.validate();

  const Manifold& m = f.manifold();
  const double cc = c.value_or(0.0);

  CheckReport report;
  report.seed = plan.seed;
  WorstGap worst;
  double c_min = std::numeric_limits<double>::infinity();

  auto evaluate = [&](const Point& x, const Point& y, double d, double fx, double fy, const Tangent& gx) {
    const Tangent v = m.log(x, y);
    const double dm = distance_power(d, order_m);
    const double slope = m.inner(x, gx, v);
    const double rhs = fx + slope + cc * dm;
    const double gap = fy - rhs;
    c_min = std::min(c_min, (fy - fx - slope) / dm);
    worst.offer(gap, [&] { return Witness{x, y, std::nullopt, fy, rhs, gap}; });
    ++report.n_evaluated;
  };

  for (const auto& [x, y] : sample_pairs(f.domain(), plan)) {
    const double d = m.distance(x, y);
    if (d < kDegeneratePairDistance) {
      ++report.skipped_degenerate;
      continue;
    }
    const double fx = f.value(x);
    const double fy = f.value(y);
    try {
      const Tangent gx = riemannian_gradient(f, x);
      const Tangent gy = riemannian_gradient(f, y);
      evaluate(x, y, d, fx, fy, gx);
      evaluate(y, x, d, fy, fx, gy);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CutLocus) throw;
      ++report.skipped_cut_locus;
    }
  }
  finish(report, worst, c_min, c.has_value(), plan.guard_eps);
  report.runtime_ms = elapsed_ms(start);
  return report;
}

Thm31Report thm31_harness(const Function& f, double order_m, const SamplingPlan& plan) {
  Thm31Report out;
  out.zeroth = check_strong_gconvex(f, order_m, std::nullopt, plan);
  out.first = check_first_order(f, order_m, std::nullopt, plan);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  out.c_zeroth = out.zeroth.estimated_modulus.value_or(nan);
  out.c_first = out.first.estimated_modulus.value_or(nan);
  out.agree = !std::isnan(out.c_zeroth) && !std::isnan(out.c_first) &&
              (out.c_zeroth > plan.guard_eps) == (out.c_first > plan.guard_eps);
  return out;
}

}  // namespace sgc
