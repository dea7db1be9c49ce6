#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "sgc/expression.hpp"
#include "sgc/manifold.hpp"

namespace sgc {

enum class FunctionKind { Quadratic, Linear, DistPower, CosDist, Expression };

std::string_view to_string(FunctionKind kind);

inline constexpr double kDefaultFdStep = 1e-4;

/// A real-valued function on a domain ball. Catalog kinds evaluate in ambient
/// coordinates and carry analytic Riemannian gradients; expressions fall back
/// to finite differences.
///
///   quadratic   f(x) = x'Qx + b'x + offset
///   linear      f(x) = a'x
///   dist_power  f(x) = d(x, base)^p, p >= 1
///   cos_dist    f(x) = 1 - cos d(x, base) = 1 - <x, base>   (sphere only)
///
/// Every kind may carry a positive scale factor applied to value and gradient.
class Function {
 public:
  static Function quadratic(Domain domain, Mat q, Vec b, double offset = 0.0);
  static Function linear(Domain domain, Vec a);
  static Function dist_power(Domain domain, Point base, double p);
  static Function cos_dist(Domain domain, Point base);
  static Function expression(Domain domain, const std::string& text);

  Function scaled(double factor) const;

  FunctionKind kind() const;
  const Domain& domain() const { return domain_; }
  const Manifold& manifold() const { return domain_.manifold(); }
  double scale() const { return scale_; }

  double value(const Point& x) const;
  bool has_analytic_gradient() const { return kind() != FunctionKind::Expression; }
  /// Riemannian gradient in closed form; nullopt for expressions.
  std::optional<Tangent> analytic_gradient(const Point& x) const;

  struct QuadraticParams {
    Mat q;
    Vec b;
    double offset = 0.0;
  };
  struct LinearParams {
    Vec a;
  };
  struct DistPowerParams {
    Point base;
    double p = 2.0;
  };
  struct CosDistParams {
    Point base;
  };
  struct ExpressionParams {
    sgc::Expression expr;
  };
  using Params = std::variant<QuadraticParams, LinearParams, DistPowerParams, CosDistParams, ExpressionParams>;

  const Params& params() const { return params_; }

 private:
  Function(Domain domain, Params params) : domain_(std::move(domain)), params_(std::move(params)) {}

  Domain domain_;
  Params params_;
  double scale_ = 1.0;
};

/// Analytic gradient when available, otherwise fd_gradient. Throws
/// DomainViolation for x outside the function's domain and GradientFailure
/// for non-finite results.
Tangent riemannian_gradient(const Function& f, const Point& x, double h = kDefaultFdStep);

/// Central differences of f(exp_x(+-h e_j)) over an orthonormal basis {e_j}.
Tangent fd_gradient(const Function& f, const Point& x, double h = kDefaultFdStep);

}  // namespace sgc
