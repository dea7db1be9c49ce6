#pragma once

#include <string>
#include <vector>

#include "sgc/function.hpp"
#include "sgc/vip.hpp"

namespace sgc::catalog {

struct FunctionPreset {
  std::string name;
  std::string description;
  Function function;
};

/// Regression battery of (manifold, domain, function) combinations. Every
/// entry has an analytic gradient.
const std::vector<FunctionPreset>& function_presets();

/// Throws InvalidArgument for unknown names.
const FunctionPreset& function_preset(const std::string& name);

/// ((x-1)^2, (x+1)^2) on [-2, 2].
MopProblem line_biobjective(double order_m = 2.0);

/// Candidates and pinned grid x = -2, -2 + step, ..., 2 on the real line.
std::vector<Point> line_points(double step);

/// (d(., a)^2, d(., b)^2) on a Poincare disk ball.
struct PoincareBiobjective {
  MopProblem problem;
  Point a;
  Point b;
};
PoincareBiobjective poincare_biobjective();

}  // namespace sgc::catalog
