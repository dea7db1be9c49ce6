#include "sgc/function.hpp"

#include <cmath>

#include "sgc/errors.hpp"

namespace sgc {

std::string_view to_string(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::Quadratic: return "quadratic";
    case FunctionKind::Linear: return "linear";
    case FunctionKind::DistPower: return "dist_power";
    case FunctionKind::CosDist: return "cos_dist";
    case FunctionKind::Expression: return "expression";
  }
  return "unknown";
}

Function Function::quadratic(Domain domain, Mat q, Vec b, double offset) {
  const int n = domain.manifold().ambient_dim();
  if (q.rows() != n || q.cols() != n) throw Error(ErrorCode::InvalidArgument, "quadratic Q must be ambient_dim x ambient_dim");
  if (b.size() == 0) b = Vec::Zero(n);
  if (b.size() != n) throw Error(ErrorCode::InvalidArgument, "quadratic b must have ambient dimension");
  if ((q - q.transpose()).lpNorm<Eigen::Infinity>() > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "quadratic Q must be symmetric");
  }
  if (!q.allFinite() || !b.allFinite() || !std::isfinite(offset)) {
    throw Error(ErrorCode::InvalidArgument, "quadratic coefficients must be finite");
  }
  return Function(std::move(domain), QuadraticParams{std::move(q), std::move(b), offset});
}

Function Function::linear(Domain domain, Vec a) {
  if (a.size() != domain.manifold().ambient_dim() || !a.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "linear coefficient vector must have ambient dimension");
  }
  return Function(std::move(domain), LinearParams{std::move(a)});
}

Function Function::dist_power(Domain domain, Point base, double p) {
  if (!domain.manifold().is_valid(base.coords)) {
    throw Error(ErrorCode::InvalidArgument, "dist_power base must be a point of the manifold");
  }
  if (!(p >= 1.0) || !std::isfinite(p)) throw Error(ErrorCode::InvalidArgument, "dist_power exponent must be >= 1");
  return Function(std::move(domain), DistPowerParams{std::move(base), p});
}

Function Function::cos_dist(Domain domain, Point base) {
  if (domain.manifold().kind() != ManifoldKind::Sphere) {
    throw Error(ErrorCode::InvalidArgument, "cos_dist is only defined on the sphere");
  }
  if (!domain.manifold().is_valid(base.coords)) throw Error(ErrorCode::InvalidArgument, "cos_dist base must be on the sphere");
  return Function(std::move(domain), CosDistParams{std::move(base)});
}

Function Function::expression(Domain domain, const std::string& text) {
  auto expr = Expression::parse(text, domain.manifold().ambient_dim());
  return Function(std::move(domain), ExpressionParams{std::move(expr)});
}

Function Function::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) throw Error(ErrorCode::InvalidArgument, "scale factor must be positive");
  Function copy = *this;
  copy.scale_ *= factor;
  return copy;
}

FunctionKind Function::kind() const { return static_cast<FunctionKind>(params_.index()); }

double Function::value(const Point& x) const {
  const Vec& p = x.coords;
  const double raw = std::visit(
      [&](const auto& prm) -> double {
        using T = std::decay_t<decltype(prm)>;
        if constexpr (std::is_same_v<T, QuadraticParams>) {
          return p.dot(prm.q * p) + prm.b.dot(p) + prm.offset;
        } else if constexpr (std::is_same_v<T, LinearParams>) {
          return prm.a.dot(p);
        } else if constexpr (std::is_same_v<T, DistPowerParams>) {
          const double d = manifold().distance(x, prm.base);
          return prm.p == 2.0 ? d * d : std::pow(d, prm.p);
        } else if constexpr (std::is_same_v<T, CosDistParams>) {
          return 1.0 - p.dot(prm.base.coords);
        } else {
          return prm.expr.eval(p);
        }
      },
      params_);
  return scale_ * raw;
}

std::optional<Tangent> Function::analytic_gradient(const Point& x) const {
  const Manifold& m = manifold();
  std::optional<Tangent> g = std::visit(
      [&](const auto& prm) -> std::optional<Tangent> {
        using T = std::decay_t<decltype(prm)>;
        if constexpr (std::is_same_v<T, QuadraticParams>) {
          return m.gradient_from_ambient(x, 2.0 * (prm.q * x.coords) + prm.b);
        } else if constexpr (std::is_same_v<T, LinearParams>) {
          return m.gradient_from_ambient(x, prm.a);
        } else if constexpr (std::is_same_v<T, DistPowerParams>) {
          // grad d(., a)^p = -p d^(p-2) log_x(a); the p < 2 kink at a is given gradient zero.
          const Tangent to_base = m.log(x, prm.base);
          const double d = m.distance(x, prm.base);
          if (d == 0.0) return m.zero(x);
          const double coef = prm.p == 2.0 ? -2.0 : -prm.p * std::pow(d, prm.p - 2.0);
          return Tangent{x.coords, coef * to_base.comps};
        } else if constexpr (std::is_same_v<T, CosDistParams>) {
          return m.gradient_from_ambient(x, -prm.base.coords);
        } else {
          return std::nullopt;
        }
      },
      params_);
  if (g) g->comps *= scale_;
  return g;
}

Tangent fd_gradient(const Function& f, const Point& x, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidArgument, "finite-difference step must be positive");
  const Manifold& m = f.manifold();
  Tangent g = m.zero(x);
  for (const Tangent& e : m.tangent_basis(x)) {
    Tangent step = e;
    step.comps *= h;
    const double fp = f.value(m.exp(x, step));
    step.comps = -step.comps;
    const double fm = f.value(m.exp(x, step));
    g.comps += ((fp - fm) / (2.0 * h)) * e.comps;
  }
  return g;
}

Tangent riemannian_gradient(const Function& f, const Point& x, double h) {
  f.domain().require_contains(x);
  std::optional<Tangent> g = f.analytic_gradient(x);
  if (!g) g = fd_gradient(f, x, h);
  if (!g->comps.allFinite()) throw Error(ErrorCode::GradientFailure, "gradient evaluation produced non-finite values");
  return *g;
}

}  // namespace sgc
