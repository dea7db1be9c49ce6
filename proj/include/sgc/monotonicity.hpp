#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sgc/convexity.hpp"
#include "sgc/function.hpp"
#include "sgc/sampling.hpp"

namespace sgc {

enum class FieldKind { GradientOf, Linear, Rotation, Expression };

std::string_view to_string(FieldKind kind);

/// A vector field on a domain ball.
///
///   gradient_of  V = grad f
///   linear       V(x) = A x            (euclidean)
///   rotation     V(x) = (-x2, x1)      (euclidean, n = 2)
///   expression   ambient components, projected onto T_x M
class Field {
 public:
  static Field gradient_of(Function f);
  static Field linear(Domain domain, Mat a);
  static Field rotation(Domain domain);
  static Field expression(Domain domain, const std::vector<std::string>& components);

  FieldKind kind() const;
  const Domain& domain() const { return domain_; }
  const Manifold& manifold() const { return domain_.manifold(); }

  /// Throws DomainViolation outside the domain.
  Tangent eval(const Point& x) const;

  struct GradientParams {
    Function f;
  };
  struct LinearParams {
    Mat a;
  };
  struct RotationParams {};
  struct ExpressionParams {
    std::vector<sgc::Expression> components;
  };
  using Params = std::variant<GradientParams, LinearParams, RotationParams, ExpressionParams>;

  const Params& params() const { return params_; }

 private:
  Field(Domain domain, Params params) : domain_(std::move(domain)), params_(std::move(params)) {}

  Domain domain_;
  Params params_;
};

struct MonotonicityReport {
  Verdict verdict = Verdict::Pass;
  std::optional<double> estimated_beta;
  std::optional<Witness> witness;
  /// Ordered pairs whose premise held (pseudomonotonicity only).
  std::size_t premise_count = 0;
  std::size_t n_evaluated = 0;
  std::size_t skipped_degenerate = 0;
  std::size_t skipped_cut_locus = 0;
  /// Pseudomonotone check whose premise never held.
  bool vacuous = false;
  std::uint64_t seed = 0;
  double runtime_ms = 0.0;
};

/// Strong monotonicity of order m on unordered pairs:
///
///   <V(y), gamma'(1)>_y - <V(x), gamma'(0)>_x >= beta d(x,y)^m.
///
/// beta = 0 is plain monotonicity. Without beta the verdict follows the same
/// three-way rule as check_strong_gconvex, with
///   beta* = inf [<V(y), gamma'(1)>_y - <V(x), gamma'(0)>_x] / d(x,y)^m.
MonotonicityReport check_strong_monotone(const Field& v, double order_m, std::optional<double> beta,
                                         const SamplingPlan& plan);

/// Strong pseudomonotonicity of order m on ordered pairs:
///
///   <V(x), gamma'(0)>_x + beta d^m >= 0  =>  <V(y), gamma'(1)>_y >= 0,
///
/// both sides read with a -guard_eps band. The witness is the violating pair
/// with the most negative conclusion (earliest on ties).
MonotonicityReport check_pseudomonotone(const Field& v, double order_m, double beta, const SamplingPlan& plan);

struct Thm32Report {
  CheckReport zeroth;
  MonotonicityReport monotone;
  double c_zeroth = 0.0;
  double beta = 0.0;
  /// (c_zeroth > guard_eps) == (beta > guard_eps)
  bool agree = false;
  /// beta >= 2 c_zeroth - 0.05 max(1, |c_zeroth|)
  bool forward_bound_ok = false;
};

/// Compares strong convexity of f with strong monotonicity of grad f.
Thm32Report thm32_harness(const Function& f, double order_m, const SamplingPlan& plan);

}  // namespace sgc
