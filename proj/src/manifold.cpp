#include "sgc/manifold.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "sgc/errors.hpp"
#include "sgc/rng.hpp"

namespace sgc {

std::string_view to_string(ManifoldKind kind) {
  switch (kind) {
    case ManifoldKind::Euclidean: return "euclidean";
    case ManifoldKind::Sphere: return "sphere";
    case ManifoldKind::PoincareBall: return "poincare_ball";
  }
  return "unknown";
}

ManifoldKind manifold_kind_from_string(std::string_view name) {
  if (name == "euclidean") return ManifoldKind::Euclidean;
  if (name == "sphere") return ManifoldKind::Sphere;
  if (name == "poincare_ball") return ManifoldKind::PoincareBall;
  throw Error(ErrorCode::InvalidArgument, "unknown manifold kind '" + std::string(name) + "'");
}

namespace {

// a (+) b in the Poincare ball of curvature -1.
Vec mobius_add(const Vec& a, const Vec& b) {
  const double ab = a.dot(b);
  const double aa = a.squaredNorm();
  const double bb = b.squaredNorm();
  const double denom = 1.0 + 2.0 * ab + aa * bb;
  return ((1.0 + 2.0 * ab + bb) * a + (1.0 - aa) * b) / denom;
}

}  // namespace

Manifold::Manifold(ManifoldKind kind, int dim) : kind_(kind), dim_(dim) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "manifold dimension must be >= 1");
}

bool Manifold::is_valid(const Vec& coords) const {
  if (coords.size() != ambient_dim() || !coords.allFinite()) return false;
  switch (kind_) {
    case ManifoldKind::Euclidean: return true;
    case ManifoldKind::Sphere: return std::abs(coords.norm() - 1.0) <= kSphereNormTol;
    case ManifoldKind::PoincareBall: return coords.norm() <= 1.0 - kBallBoundaryTol;
  }
  return false;
}

Point Manifold::point(Vec coords) const {
  if (coords.size() != ambient_dim()) {
    std::ostringstream os;
    os << "expected " << ambient_dim() << " ambient coordinates, got " << coords.size();
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  if (!coords.allFinite()) throw Error(ErrorCode::InvalidArgument, "non-finite coordinates");
  if (kind_ == ManifoldKind::Sphere && std::abs(coords.norm() - 1.0) > kSphereNormTol) {
    throw Error(ErrorCode::InvalidArgument, "sphere point must have unit norm");
  }
  if (kind_ == ManifoldKind::PoincareBall && coords.norm() > 1.0 - kBallBoundaryTol) {
    throw Error(ErrorCode::OutOfBall, "point is not strictly inside the Poincare ball");
  }
  return Point{std::move(coords)};
}

Tangent Manifold::tangent(const Point& base, Vec comps) const {
  if (comps.size() != ambient_dim()) {
    throw Error(ErrorCode::InvalidArgument, "tangent vector has wrong ambient dimension");
  }
  Tangent v{base.coords, std::move(comps)};
  require_tangent_at(base, v);
  return v;
}

Tangent Manifold::zero(const Point& base) const { return Tangent{base.coords, Vec::Zero(ambient_dim())}; }

void Manifold::require_tangent_at(const Point& x, const Tangent& v) const {
  if (v.base.size() != x.coords.size() || (v.base - x.coords).lpNorm<Eigen::Infinity>() > kBaseMatchTol) {
    throw Error(ErrorCode::BaseMismatch, "tangent vector is not based at the given point");
  }
  if (kind_ == ManifoldKind::Sphere) {
    const double normal = x.coords.dot(v.comps);
    if (std::abs(normal) > kTangencyTol * std::max(1.0, v.comps.norm())) {
      throw Error(ErrorCode::NonTangent, "vector has a normal component on the sphere");
    }
  }
}

double Manifold::metric_scale(const Point& x) const {
  if (kind_ == ManifoldKind::PoincareBall) return 2.0 / (1.0 - x.coords.squaredNorm());
  return 1.0;
}

Point Manifold::exp(const Point& x, const Tangent& v) const {
  require_tangent_at(x, v);
  const double nv = v.comps.norm();
  if (nv == 0.0) return x;
  switch (kind_) {
    case ManifoldKind::Euclidean:
      return Point{x.coords + v.comps};
    case ManifoldKind::Sphere: {
      if (nv >= std::numbers::pi) {
        throw Error(ErrorCode::StepTooLarge, "sphere exp step length must be < pi");
      }
      Vec y = std::cos(nv) * x.coords + (std::sin(nv) / nv) * v.comps;
      y.normalize();
      return Point{std::move(y)};
    }
    case ManifoldKind::PoincareBall: {
      const double lambda = metric_scale(x);
      const Vec w = (std::tanh(0.5 * lambda * nv) / nv) * v.comps;
      Vec y = mobius_add(x.coords, w);
      if (!y.allFinite() || y.norm() > 1.0 - kBallBoundaryTol) {
        throw Error(ErrorCode::OutOfBall, "exp step reaches the boundary of the Poincare ball");
      }
      return Point{std::move(y)};
    }
  }
  return x;
}

Tangent Manifold::log(const Point& x, const Point& y) const {
  switch (kind_) {
    case ManifoldKind::Euclidean:
      return Tangent{x.coords, y.coords - x.coords};
    case ManifoldKind::Sphere: {
      const double c = x.coords.dot(y.coords);
      if (c <= -1.0 + kAntipodalTol) {
        throw Error(ErrorCode::CutLocus, "antipodal points have no unique geodesic");
      }
      Vec u = y.coords - c * x.coords;
      const double nu = u.norm();
      if (nu == 0.0) return zero(x);
      return Tangent{x.coords, (distance(x, y) / nu) * u};
    }
    case ManifoldKind::PoincareBall: {
      const Vec u = mobius_add(-x.coords, y.coords);
      const double nu = u.norm();
      if (nu == 0.0) return zero(x);
      const double scale = (1.0 - x.coords.squaredNorm()) * std::atanh(std::min(nu, 1.0 - 1e-16)) / nu;
      return Tangent{x.coords, scale * u};
    }
  }
  return zero(x);
}

double Manifold::distance(const Point& x, const Point& y) const {
  switch (kind_) {
    case ManifoldKind::Euclidean:
      return (x.coords - y.coords).norm();
    case ManifoldKind::Sphere:
      // Accurate for both nearby and nearly antipodal points.
      return 2.0 * std::atan2((x.coords - y.coords).norm(), (x.coords + y.coords).norm());
    case ManifoldKind::PoincareBall: {
      // sinh(d/2)^2 = |x-y|^2 / ((1-|x|^2)(1-|y|^2)), symmetric in x and y.
      const double q = (x.coords - y.coords).norm() /
                       std::sqrt((1.0 - x.coords.squaredNorm()) * (1.0 - y.coords.squaredNorm()));
      return 2.0 * std::asinh(q);
    }
  }
  return 0.0;
}

Point Manifold::geodesic_point(const Point& x, const Point& y, double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorCode::InvalidArgument, "geodesic parameter must lie in [0, 1]");
  if (t == 0.0) return x;
  if (t == 1.0) {
    log(x, y);  // cut-locus check still applies
    return y;
  }
  Tangent v = log(x, y);
  v.comps *= t;
  return exp(x, v);
}

GeodesicSegment Manifold::segment(const Point& x, const Point& y) const {
  return GeodesicSegment{x, y, log(x, y), distance(x, y)};
}

std::pair<Tangent, Tangent> Manifold::endpoint_velocities(const Point& x, const Point& y) const {
  Tangent start = log(x, y);
  Tangent end = log(y, x);
  end.comps = -end.comps;
  return {std::move(start), std::move(end)};
}

double Manifold::inner(const Point& x, const Tangent& u, const Tangent& v) const {
  for (const Tangent* w : {&u, &v}) {
    if (w->base.size() != x.coords.size() || (w->base - x.coords).lpNorm<Eigen::Infinity>() > kBaseMatchTol) {
      throw Error(ErrorCode::BaseMismatch, "inner product of vectors from different tangent spaces");
    }
  }
  const double s = metric_scale(x);
  return s * s * u.comps.dot(v.comps);
}

double Manifold::norm(const Point& x, const Tangent& u) const { return std::sqrt(inner(x, u, u)); }

std::vector<Tangent> Manifold::tangent_basis(const Point& x) const {
  std::vector<Tangent> basis;
  basis.reserve(dim_);
  const int n = ambient_dim();
  if (kind_ != ManifoldKind::Sphere) {
    const double s = metric_scale(x);
    for (int j = 0; j < n; ++j) basis.push_back(Tangent{x.coords, Vec::Unit(n, j) / s});
    return basis;
  }
  // Gram-Schmidt over {x, e_0, ..., e_n}; the normal x is dropped afterwards.
  std::vector<Vec> q{x.coords.normalized()};
  for (int j = 0; j < n && static_cast<int>(basis.size()) < dim_; ++j) {
    Vec w = Vec::Unit(n, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vec& qi : q) w -= qi.dot(w) * qi;
    }
    const double nw = w.norm();
    if (nw < 1e-6) continue;
    w /= nw;
    q.push_back(w);
    basis.push_back(Tangent{x.coords, w});
  }
  return basis;
}

Tangent Manifold::project(const Point& x, const Vec& ambient) const {
  if (kind_ == ManifoldKind::Sphere) return Tangent{x.coords, ambient - x.coords.dot(ambient) * x.coords};
  return Tangent{x.coords, ambient};
}

Tangent Manifold::gradient_from_ambient(const Point& x, const Vec& euclidean_grad) const {
  Tangent g = project(x, euclidean_grad);
  const double s = metric_scale(x);
  g.comps /= s * s;
  return g;
}

Domain::Domain(Manifold manifold, Point center, double radius)
    : manifold_(manifold), center_(std::move(center)), radius_(radius) {
  if (!manifold_.is_valid(center_.coords)) throw Error(ErrorCode::InvalidArgument, "domain center is not a valid point");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::InvalidArgument, "domain radius must be positive and finite");
  }
  if (manifold_.kind() == ManifoldKind::Sphere && radius >= std::numbers::pi / 2 - 1e-9) {
    std::ostringstream os;
    os << "sphere domain radius " << radius << " must be < pi/2 - 1e-9 (convexity radius)";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  if (manifold_.kind() == ManifoldKind::PoincareBall) {
    const Point origin{Vec::Zero(manifold_.ambient_dim())};
    // Keeps every domain point well clear of the ideal boundary in double precision.
    if (manifold_.distance(origin, center_) + radius > 20.0) {
      throw Error(ErrorCode::InvalidArgument, "Poincare domain extends too close to the ideal boundary");
    }
  }
}

bool Domain::contains(const Point& p, double tol) const {
  if (!manifold_.is_valid(p.coords)) return false;
  return manifold_.distance(center_, p) <= radius_ + tol * std::max(1.0, radius_);
}

void Domain::require_contains(const Point& p) const {
  if (!contains(p)) throw Error(ErrorCode::DomainViolation, "point lies outside the domain ball");
}

Point sample_point(const Domain& domain, std::uint64_t seed, std::string_view tag, std::uint64_t index) {
  const Manifold& m = domain.manifold();
  Stream rng(seed, tag, index);
  const auto basis = m.tangent_basis(domain.center());
  Vec dir = Vec::Zero(m.ambient_dim());
  double len2 = 0.0;
  while (len2 < 1e-24) {
    dir.setZero();
    Eigen::VectorXd coeff(basis.size());
    for (Eigen::Index j = 0; j < coeff.size(); ++j) coeff[j] = rng.normal();
    len2 = coeff.squaredNorm();
    for (std::size_t j = 0; j < basis.size(); ++j) dir += coeff[static_cast<Eigen::Index>(j)] * basis[j].comps;
  }
  dir /= std::sqrt(len2);  // unit metric norm, since the basis is orthonormal
  const double r = domain.radius() * std::pow(rng.uniform(), 1.0 / m.dim());
  return m.exp(domain.center(), Tangent{domain.center().coords, r * dir});
}

std::vector<Point> sample_domain(const Domain& domain, std::size_t n, std::uint64_t seed) {
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sample_point(domain, seed, "domain", i));
  return out;
}

}  // namespace sgc
