#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace sgc {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

enum class ManifoldKind { Euclidean, Sphere, PoincareBall };

std::string_view to_string(ManifoldKind kind);
ManifoldKind manifold_kind_from_string(std::string_view name);

/// A point in ambient coordinates (R^n, or R^{n+1} for the sphere).
struct Point {
  Vec coords;
};

/// Ambient representation of a vector in T_base M.
struct Tangent {
  Vec base;
  Vec comps;
};

struct GeodesicSegment {
  Point start;
  Point end;
  Tangent initial_velocity;
  double speed = 0.0;
};

// Tolerances that define the point/tangent invariants.
inline constexpr double kSphereNormTol = 1e-12;
inline constexpr double kBallBoundaryTol = 1e-12;
inline constexpr double kTangencyTol = 1e-10;
inline constexpr double kAntipodalTol = 1e-9;
inline constexpr double kBaseMatchTol = 1e-12;

/// One of three model manifolds with closed-form geodesics: flat R^n, the unit
/// sphere S^n embedded in R^{n+1}, and the Poincare ball of curvature -1 with
/// metric 4/(1-|x|^2)^2 times the Euclidean one.
///
/// Geodesics are always affinely parametrized on [0, 1], so the speed of
/// gamma_xy equals distance(x, y) at every t.
class Manifold {
 public:
  Manifold(ManifoldKind kind, int dim);

  ManifoldKind kind() const { return kind_; }
  int dim() const { return dim_; }
  int ambient_dim() const { return kind_ == ManifoldKind::Sphere ? dim_ + 1 : dim_; }

  /// Validating constructors. Throw InvalidArgument / OutOfBall / NonTangent.
  Point point(Vec coords) const;
  Tangent tangent(const Point& base, Vec comps) const;
  Tangent zero(const Point& base) const;

  /// True if the coordinates satisfy the point invariants.
  bool is_valid(const Vec& coords) const;

  Point exp(const Point& x, const Tangent& v) const;
  Tangent log(const Point& x, const Point& y) const;
  double distance(const Point& x, const Point& y) const;
  Point geodesic_point(const Point& x, const Point& y, double t) const;
  GeodesicSegment segment(const Point& x, const Point& y) const;

  /// (gamma_xy'(0) at x, gamma_xy'(1) at y).
  std::pair<Tangent, Tangent> endpoint_velocities(const Point& x, const Point& y) const;

  double inner(const Point& x, const Tangent& u, const Tangent& v) const;
  double norm(const Point& x, const Tangent& u) const;

  /// Orthonormal basis of T_x M with respect to the metric.
  std::vector<Tangent> tangent_basis(const Point& x) const;

  /// Orthogonal projection of an ambient vector onto T_x M.
  Tangent project(const Point& x, const Vec& ambient) const;

  /// Riemannian gradient from the Euclidean gradient of an ambient extension.
  Tangent gradient_from_ambient(const Point& x, const Vec& euclidean_grad) const;

  /// Square root of the conformal factor: |v|_x = scale(x) * |v|_2.
  double metric_scale(const Point& x) const;

  friend bool operator==(const Manifold& a, const Manifold& b) {
    return a.kind_ == b.kind_ && a.dim_ == b.dim_;
  }

 private:
  void require_tangent_at(const Point& x, const Tangent& v) const;

  ManifoldKind kind_;
  int dim_;
};

/// Geodesic ball B(center, radius). Radii on the sphere stay below pi/2 so the
/// ball is strongly convex and geodesics between its points are unique.
class Domain {
 public:
  Domain(Manifold manifold, Point center, double radius);

  const Manifold& manifold() const { return manifold_; }
  const Point& center() const { return center_; }
  double radius() const { return radius_; }

  bool contains(const Point& p, double tol = 1e-9) const;
  /// Throws DomainViolation if p is outside.
  void require_contains(const Point& p) const;

 private:
  Manifold manifold_;
  Point center_;
  double radius_;
};

/// Draws one point: uniform direction in T_center, radial law r = R * U^(1/dim),
/// pushed through exp.
Point sample_point(const Domain& domain, std::uint64_t seed, std::string_view tag, std::uint64_t index);

/// n points, point i taken from substream ("domain", i).
std::vector<Point> sample_domain(const Domain& domain, std::size_t n, std::uint64_t seed);

}  // namespace sgc
