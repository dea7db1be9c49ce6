#include "sgc/monotonicity.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "sgc/errors.hpp"

namespace sgc {

std::string_view to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::GradientOf: return "gradient_of";
    case FieldKind::Linear: return "linear";
    case FieldKind::Rotation: return "rotation";
    case FieldKind::Expression: return "expression";
  }
  return "unknown";
}

Field Field::gradient_of(Function f) {
  Domain d = f.domain();
  return Field(std::move(d), GradientParams{std::move(f)});
}

Field Field::linear(Domain domain, Mat a) {
  if (domain.manifold().kind() != ManifoldKind::Euclidean) {
    throw Error(ErrorCode::InvalidArgument, "linear fields are only defined on euclidean space");
  }
  const int n = domain.manifold().dim();
  if (a.rows() != n || a.cols() != n || !a.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "linear field matrix must be dim x dim");
  }
  return Field(std::move(domain), LinearParams{std::move(a)});
}

Field Field::rotation(Domain domain) {
  if (domain.manifold().kind() != ManifoldKind::Euclidean || domain.manifold().dim() != 2) {
    throw Error(ErrorCode::InvalidArgument, "rotation field requires euclidean space of dimension 2");
  }
  return Field(std::move(domain), RotationParams{});
}

Field Field::expression(Domain domain, const std::vector<std::string>& components) {
  const int n = domain.manifold().ambient_dim();
  if (static_cast<int>(components.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "expression field needs one component per ambient coordinate");
  }
  std::vector<sgc::Expression> parsed;
  parsed.reserve(components.size());
  for (const auto& text : components) parsed.push_back(sgc::Expression::parse(text, n));
  return Field(std::move(domain), ExpressionParams{std::move(parsed)});
}

FieldKind Field::kind() const { return static_cast<FieldKind>(params_.index()); }

Tangent Field::eval(const Point& x) const {
  domain_.require_contains(x);
  return std::visit(
      [&](const auto& prm) -> Tangent {
        using T = std::decay_t<decltype(prm)>;
        if constexpr (std::is_same_v<T, GradientParams>) {
          return riemannian_gradient(prm.f, x);
        } else if constexpr (std::is_same_v<T, LinearParams>) {
          return Tangent{x.coords, prm.a * x.coords};
        } else if constexpr (std::is_same_v<T, RotationParams>) {
          Vec out(2);
          out << -x.coords[1], x.coords[0];
          return Tangent{x.coords, out};
        } else {
          Vec out(static_cast<Eigen::Index>(prm.components.size()));
          for (std::size_t i = 0; i < prm.components.size(); ++i) {
            out[static_cast<Eigen::Index>(i)] = prm.components[i].eval(x.coords);
          }
          return manifold().project(x, out);
        }
      },
      params_);
}

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

MonotonicityReport check_strong_monotone(const Field& v, double order_m, std::optional<double> beta,
                                         const SamplingPlan& plan) {
  const auto start = std::chrono::steady_clock::now();
  require_order(order_m);
  if (beta && (!(*beta >= 0.0) || !std::isfinite(*beta))) throw Error(ErrorCode::InvalidArgument, "beta must be >= 0");
  plan.validate();

  const Manifold& m = v.manifold();
  const double bb = beta.value_or(0.0);
  MonotonicityReport report;
  report.seed = plan.seed;
  WorstGap worst;
  double b_min = std::numeric_limits<double>::infinity();

  for (const auto& [x, y] : sample_pairs(v.domain(), plan)) {
    const double d = m.distance(x, y);
    if (d < kDegeneratePairDistance) {
      ++report.skipped_degenerate;
      continue;
    }
    std::pair<Tangent, Tangent> vel;
    try {
      vel = m.endpoint_velocities(x, y);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CutLocus) throw;
      ++report.skipped_cut_locus;
      continue;
    }
    const double dm = distance_power(d, order_m);
    const double increment = m.inner(y, v.eval(y), vel.second) - m.inner(x, v.eval(x), vel.first);
    const double rhs = bb * dm;
    const double gap = increment - rhs;
    b_min = std::min(b_min, increment / dm);
    worst.offer(gap, [&] { return Witness{x, y, std::nullopt, increment, rhs, gap}; });
    ++report.n_evaluated;
  }

  if (report.n_evaluated > 0) report.estimated_beta = b_min;
  if (worst.get() && worst.get()->gap < -plan.guard_eps) {
    report.verdict = Verdict::Fail;
    report.witness = worst.get();
  } else if (beta) {
    report.verdict = Verdict::Pass;
  } else {
    report.verdict = (report.n_evaluated > 0 && b_min > plan.guard_eps) ? Verdict::Pass : Verdict::Degenerate;
  }
  report.runtime_ms = elapsed_ms(start);
  return report;
}

MonotonicityReport check_pseudomonotone(const Field& v, double order_m, double beta, const SamplingPlan& plan) {
  const auto start = std::chrono::steady_clock::now();
  require_order(order_m);
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw Error(ErrorCode::InvalidArgument, "beta must be >= 0");
  plan.validate();

  const Manifold& m = v.manifold();
  const double eps = plan.guard_eps;
  MonotonicityReport report;
  report.seed = plan.seed;
  WorstGap worst;

  auto evaluate = [&](const Point& x, const Point& y, double dm, const Tangent& vx, const Tangent& vy) {
    const auto [v0, v1] = m.endpoint_velocities(x, y);
    const double premise = m.inner(x, vx, v0) + beta * dm;
    ++report.n_evaluated;
    if (premise < -eps) return;
    ++report.premise_count;
    const double conclusion = m.inner(y, vy, v1);
    if (conclusion < -eps) {
      worst.offer(conclusion, [&] { return Witness{x, y, std::nullopt, conclusion, 0.0, conclusion}; });
    }
  };

  for (const auto& [x, y] : sample_pairs(v.domain(), plan)) {
    const double d = m.distance(x, y);
    if (d < kDegeneratePairDistance) {
      ++report.skipped_degenerate;
      continue;
    }
    const double dm = distance_power(d, order_m);
    try {
      const Tangent vx = v.eval(x);
      const Tangent vy = v.eval(y);
      evaluate(x, y, dm, vx, vy);
      evaluate(y, x, dm, vy, vx);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CutLocus) throw;
      ++report.skipped_cut_locus;
    }
  }

  report.vacuous = report.premise_count == 0;
  if (worst.get()) {
    report.verdict = Verdict::Fail;
    report.witness = worst.get();
  } else {
    report.verdict = Verdict::Pass;
  }
  report.runtime_ms = elapsed_ms(start);
  return report;
}

Thm32Report thm32_harness(const Function& f, double order_m, const SamplingPlan& plan) {
  Thm32Report out;
  out.zeroth = check_strong_gconvex(f, order_m, std::nullopt, plan);
  out.monotone = check_strong_monotone(Field::gradient_of(f), order_m, std::nullopt, plan);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  out.c_zeroth = out.zeroth.estimated_modulus.value_or(nan);
  out.beta = out.monotone.estimated_beta.value_or(nan);
  const double eps = plan.guard_eps;
  out.agree = !std::isnan(out.c_zeroth) && !std::isnan(out.beta) && (out.c_zeroth > eps) == (out.beta > eps);
  out.forward_bound_ok = out.beta >= 2.0 * out.c_zeroth - 0.05 * std::max(1.0, std::abs(out.c_zeroth));
  return out;
}

}  // namespace sgc
