#include "sgc/catalog.hpp"

#include <cmath>
#include <numbers>

#include "sgc/errors.hpp"

namespace sgc::catalog {

namespace {

Vec vec(std::initializer_list<double> v) {
  Vec out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

Domain euclid_ball(int dim, double radius) {
  Manifold m(ManifoldKind::Euclidean, dim);
  return Domain(m, m.point(Vec::Zero(dim)), radius);
}

std::vector<FunctionPreset> build_presets() {
  std::vector<FunctionPreset> out;
  const Domain e2 = euclid_ball(2, 1.0);
  out.push_back({"euclid2_sqnorm", "|x|^2 on the unit disk of R^2",
                 Function::quadratic(e2, Mat::Identity(2, 2), Vec::Zero(2))});
  out.push_back({"euclid2_aniso", "x'diag(2,0.5)x + (0.3,-0.1)'x on the unit disk of R^2",
                 Function::quadratic(e2, Vec(vec({2.0, 0.5})).asDiagonal().toDenseMatrix(), vec({0.3, -0.1}))});
  out.push_back({"euclid2_saddle", "x1^2 - x2^2 on the unit disk of R^2 (not convex)",
                 Function::quadratic(e2, Vec(vec({1.0, -1.0})).asDiagonal().toDenseMatrix(), Vec::Zero(2))});
  out.push_back({"euclid2_linear", "x1 - 2 x2 on the unit disk of R^2 (convex, not strongly)",
                 Function::linear(e2, vec({1.0, -2.0}))});

  const Domain e1 = euclid_ball(1, 2.0);
  out.push_back({"euclid1_shifted", "(x-1)^2 on [-2, 2]", Function::dist_power(e1, e1.manifold().point(vec({1.0})), 2.0)});

  const Manifold s2(ManifoldKind::Sphere, 2);
  const Point pole = s2.point(vec({0.0, 0.0, 1.0}));
  const Domain cap(s2, pole, std::numbers::pi / 4);
  out.push_back({"sphere2_cosdist", "1 - cos d(p, pole) on the pi/4 cap of S^2", Function::cos_dist(cap, pole)});
  out.push_back({"sphere2_dist2", "d(p, a)^2 on the pi/4 cap of S^2, a off the pole",
                 Function::dist_power(cap, s2.point(vec({std::sin(0.2), 0.0, std::cos(0.2)})), 2.0)});

  const Manifold h2(ManifoldKind::PoincareBall, 2);
  const Domain disk(h2, h2.point(Vec::Zero(2)), 0.8);
  out.push_back({"poincare2_dist2", "d(x, x0)^2 on a Poincare disk ball of radius 0.8",
                 Function::dist_power(disk, h2.point(vec({0.1, 0.2})), 2.0)});

  const Manifold h3(ManifoldKind::PoincareBall, 3);
  const Domain ball3(h3, h3.point(vec({0.1, 0.0, 0.0})), 0.6);
  out.push_back({"poincare3_dist2", "d(x, x0)^2 on a 3-d Poincare ball of radius 0.6",
                 Function::dist_power(ball3, h3.point(vec({0.0, 0.1, 0.1})), 2.0)});
  return out;
}

}  // namespace

const std::vector<FunctionPreset>& function_presets() {
  static const std::vector<FunctionPreset> presets = build_presets();
  return presets;
}

const FunctionPreset& function_preset(const std::string& name) {
  for (const auto& p : function_presets()) {
    if (p.name == name) return p;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown catalog preset '" + name + "'");
}

MopProblem line_biobjective(double order_m) {
  const Domain line = euclid_ball(1, 2.0);
  const Manifold& m = line.manifold();
  return MopProblem{{Function::dist_power(line, m.point(vec({1.0})), 2.0),
                     Function::dist_power(line, m.point(vec({-1.0})), 2.0)},
                    order_m};
}

std::vector<Point> line_points(double step) {
  std::vector<Point> pts;
  const auto n = static_cast<long>(std::llround(4.0 / step));
  for (long i = 0; i <= n; ++i) pts.push_back(Point{vec({-2.0 + 4.0 * static_cast<double>(i) / static_cast<double>(n)})});
  return pts;
}

PoincareBiobjective poincare_biobjective() {
  const Manifold h2(ManifoldKind::PoincareBall, 2);
  const Domain disk(h2, h2.point(Vec::Zero(2)), 1.2);
  Point a = h2.point(vec({-0.25, 0.1}));
  Point b = h2.point(vec({0.3, -0.05}));
  MopProblem problem{{Function::dist_power(disk, a, 2.0), Function::dist_power(disk, b, 2.0)}, 2.0};
  return {std::move(problem), std::move(a), std::move(b)};
}

}  // namespace sgc::catalog
