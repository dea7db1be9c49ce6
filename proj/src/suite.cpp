#include "sgc/suite.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "sgc/catalog.hpp"
#include "sgc/errors.hpp"
#include "sgc/scenario.hpp"

namespace sgc {

using nlohmann::json;

KernelErrors kernel_errors(const Domain& domain, std::size_t n_cases, std::uint64_t seed) {
  const Manifold& m = domain.manifold();
  KernelErrors worst;
  const double h = 1e-5;
  for (std::uint64_t i = 0; i < n_cases; ++i) {
    const Point x = sample_point(domain, seed, "kernel.x", i);
    const Point y = sample_point(domain, seed, "kernel.y", i);

    const Tangent v = m.log(x, y);
    worst.round_trip = std::max(worst.round_trip, m.distance(m.exp(x, v), y));
    const Tangent back = m.log(x, m.exp(x, v));
    worst.round_trip = std::max(worst.round_trip, m.norm(x, Tangent{x.coords, back.comps - v.comps}));

    const double d = m.distance(x, y);
    for (int k = 0; k <= 10; ++k) {
      const double t = k / 10.0;
      const Point p = m.geodesic_point(x, y, t);
      worst.segment = std::max(worst.segment, std::abs(m.distance(x, p) - t * d));
      Vec deriv;
      if (k == 0) {
        deriv = (-3.0 * p.coords + 4.0 * m.geodesic_point(x, y, h).coords - m.geodesic_point(x, y, 2 * h).coords) / (2 * h);
      } else if (k == 10) {
        deriv = (3.0 * p.coords - 4.0 * m.geodesic_point(x, y, 1 - h).coords + m.geodesic_point(x, y, 1 - 2 * h).coords) /
                (2 * h);
      } else {
        deriv = (m.geodesic_point(x, y, t + h).coords - m.geodesic_point(x, y, t - h).coords) / (2 * h);
      }
      worst.speed = std::max(worst.speed, std::abs(m.metric_scale(p) * deriv.norm() - d));
    }
  }
  return worst;
}

std::vector<Point> polar_grid(const Domain& domain, int rings) {
  const Manifold& m = domain.manifold();
  if (m.dim() != 2) throw Error(ErrorCode::InvalidArgument, "polar grids need a 2-dimensional domain");
  if (rings < 1) throw Error(ErrorCode::InvalidArgument, "polar grid needs at least one ring");
  const Point& c = domain.center();
  const auto basis = m.tangent_basis(c);
  std::vector<Point> pts{c};
  for (int k = 1; k <= rings; ++k) {
    const double r = domain.radius() * k / rings;
    for (int j = 0; j < 6 * k; ++j) {
      const double a = 2.0 * std::numbers::pi * j / (6 * k);
      pts.push_back(m.exp(c, Tangent{c.coords, r * (std::cos(a) * basis[0].comps + std::sin(a) * basis[1].comps)}));
    }
  }
  return pts;
}

double grid_modulus(const Function& f, double order_m, const std::vector<Point>& points, std::size_t t_grid) {
  const Manifold& m = f.manifold();
  const auto ts = t_nodes(t_grid);
  std::vector<double> values;
  values.reserve(points.size());
  for (const Point& p : points) values.push_back(f.value(p));
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double d = m.distance(points[i], points[j]);
      if (d < kDegeneratePairDistance) continue;
      const double dm = distance_power(d, order_m);
      for (double t : ts) {
        const double chord = (1 - t) * values[i] + t * values[j];
        best = std::min(best, (chord - f.value(m.geodesic_point(points[i], points[j], t))) / (t * (1 - t) * dm));
      }
    }
  }
  return best;
}

namespace {

json run_config(const json& config) { return run_check(parse_scenario(config)); }

json sampling(const SuiteOptions& o, std::size_t n_pairs) { return json{{"n_pairs", n_pairs}, {"seed", o.seed}}; }

json unit_disk_quadratic(const SuiteOptions& o, const std::string& check, std::size_t n_pairs) {
  return json{{"name", "euclid2_sqnorm_" + check},
              {"manifold", {{"kind", "euclidean"}, {"dim", 2}}},
              {"domain", {{"center", {0.0, 0.0}}, {"radius", 1.0}}},
              {"check", check},
              {"order_m", 2},
              {"function", {{"kind", "quadratic"}, {"q", {{1.0, 0.0}, {0.0, 1.0}}}}},
              {"sampling", sampling(o, n_pairs)}};
}

json preset_config(const std::string& preset, const std::string& check, double order_m, const SuiteOptions& o) {
  return json{{"name", preset + "_" + check},
              {"preset", preset},
              {"check", check},
              {"order_m", order_m},
              {"sampling", sampling(o, o.samples)}};
}

double modulus_of(const json& report) {
  return report["estimated_modulus"].is_null() ? std::numeric_limits<double>::quiet_NaN()
                                               : report["estimated_modulus"].get<double>();
}

bool within(double v, double lo, double hi) { return v >= lo && v <= hi; }

SuiteRow make_row(int criterion, std::string scenario, double modulus, double expected, double tolerance, bool pass,
                  json details) {
  SuiteRow row;
  row.criterion = criterion;
  row.scenario = std::move(scenario);
  row.verdict = pass ? "PASS" : "FAIL";
  row.modulus = modulus;
  row.expected = expected;
  row.tolerance = tolerance;
  row.pass = pass;
  row.report = json{{"scenario", row.scenario}, {"criterion", criterion}, {"verdict", row.verdict},
                    {"modulus", modulus},       {"expected", expected},   {"tolerance", tolerance},
                    {"pass", pass},             {"version", kVersion},    {"details", std::move(details)}};
  return row;
}

SuiteRow geometry_kernels(const SuiteOptions& o) {
  const Manifold s2(ManifoldKind::Sphere, 2), s3(ManifoldKind::Sphere, 3);
  const Manifold h2(ManifoldKind::PoincareBall, 2), h3(ManifoldKind::PoincareBall, 3);
  const Manifold e3(ManifoldKind::Euclidean, 3);
  const std::vector<Domain> domains{
      Domain(e3, Point{Vec::Zero(3)}, 2.0),
      Domain(s2, s2.point((Vec(3) << 0, 0, 1).finished()), 1.4),
      Domain(s3, s3.point((Vec(4) << 0.5, 0.5, 0.5, 0.5).finished()), 1.2),
      Domain(h2, h2.point((Vec(2) << 0.2, -0.1).finished()), 1.5),
      Domain(h3, h3.point((Vec(3) << 0.0, 0.3, 0.1).finished()), 1.0),
  };
  KernelErrors all;
  json per = json::array();
  for (const Domain& d : domains) {
    const KernelErrors e = kernel_errors(d, 1000, o.seed);
    all.round_trip = std::max(all.round_trip, e.round_trip);
    all.speed = std::max(all.speed, e.speed);
    all.segment = std::max(all.segment, e.segment);
    per.push_back({{"manifold", to_string(d.manifold().kind())},
                   {"dim", d.manifold().dim()},
                   {"round_trip", e.round_trip},
                   {"speed", e.speed},
                   {"segment", e.segment}});
  }
  const bool pass = all.round_trip <= 1e-9 && all.speed <= 1e-6 && all.segment <= 1e-8;
  return make_row(1, "01_geometry_kernels", all.round_trip, 0.0, 1e-9, pass,
                  {{"cases_per_manifold", 1000},
                   {"round_trip", all.round_trip},
                   {"speed", all.speed},
                   {"segment", all.segment},
                   {"per_manifold", per}});
}

SuiteRow euclidean_quadratic(const SuiteOptions& o) {
  json zeroth_cfg = unit_disk_quadratic(o, "convexity", 10000);
  if (o.inject_failure) zeroth_cfg["c"] = 1.01;
  const json zeroth = run_config(zeroth_cfg);
  const json first = run_config(unit_disk_quadratic(o, "first_order", 10000));
  const double c0 = modulus_of(zeroth), c1 = modulus_of(first);
  const bool pass = zeroth["verdict"] == "PASS" && within(c0, 0.98, 1.02) && within(c1, 0.98, 1.02);
  return make_row(2, "02_euclid_quadratic_modulus", c0, 1.0, 0.02, pass,
                  {{"c_zeroth", c0}, {"c_first", c1}, {"zeroth", zeroth}, {"first", first}});
}

SuiteRow poincare_dist2(const SuiteOptions& o) {
  const json zeroth = run_config(preset_config("poincare2_dist2", "convexity", 2.0, o));
  json field_cfg = preset_config("poincare2_dist2", "monotone", 2.0, o);
  field_cfg["field"] = {{"kind", "gradient_of"}};
  const json mono = run_config(field_cfg);
  const double c0 = modulus_of(zeroth), beta = modulus_of(mono);
  const bool pass = within(c0, 0.90, 1.10) && beta >= 1.9;
  return make_row(3, "03_poincare_dist2_modulus", c0, 1.0, 0.10, pass,
                  {{"c_zeroth", c0}, {"beta", beta}, {"zeroth", zeroth}, {"monotone", mono}});
}

SuiteRow sphere_cosdist(const SuiteOptions& o) {
  const json zeroth = run_config(preset_config("sphere2_cosdist", "convexity", 2.0, o));
  const Function& f = catalog::function_preset("sphere2_cosdist").function;
  const std::vector<Point> grid = polar_grid(f.domain(), 16);
  const double oracle = grid_modulus(f, 2.0, grid, 9);
  const double c0 = modulus_of(zeroth);
  const double rel = std::abs(c0 - oracle) / oracle;
  const bool pass = within(c0, 0.33, 0.38) && rel <= 0.02;
  return make_row(4, "04_sphere_cosdist_modulus", c0, std::cos(std::numbers::pi / 4) / 2, 0.025, pass,
                  {{"c_zeroth", c0},
                   {"grid_oracle", oracle},
                   {"grid_points", grid.size()},
                   {"relative_difference", rel},
                   {"zeroth", zeroth}});
}

SuiteRow theorem_battery(int criterion, const std::string& check, const SuiteOptions& o) {
  json runs = json::array();
  std::size_t agree = 0, forward_ok = 0, total = 0;
  for (const auto& p : catalog::function_presets()) {
    for (double m : {2.0, 3.0}) {
      const json r = run_config(preset_config(p.name, check, m, o));
      ++total;
      agree += r["details"]["agree"].get<bool>();
      if (check == "thm32") forward_ok += r["details"]["forward_bound_ok"].get<bool>();
      runs.push_back(r);
    }
  }
  const double rate = static_cast<double>(agree) / static_cast<double>(total);
  json details{{"combinations", total}, {"agreeing", agree}, {"runs", runs}};
  bool pass = agree == total && total >= 12;
  if (check == "thm32") {
    details["forward_bound_ok"] = forward_ok;
    pass = pass && forward_ok == total;
  }
  const std::string name = check == "thm31" ? "05_thm31_battery" : "06_thm32_battery";
  return make_row(criterion, name, rate, 1.0, 0.0, pass, details);
}

/// Gradient fields of the battery plus two fields given directly.
std::vector<std::pair<std::string, json>> field_configs(const SuiteOptions& o) {
  std::vector<std::pair<std::string, json>> out;
  for (const auto& p : catalog::function_presets()) {
    json cfg = preset_config(p.name, "monotone", 2.0, o);
    cfg["field"] = {{"kind", "gradient_of"}};
    out.emplace_back("grad " + p.name, cfg);
  }
  auto disk_field = [&](const std::string& name, const json& field) {
    return json{{"name", name},
                {"manifold", {{"kind", "euclidean"}, {"dim", 2}}},
                {"domain", {{"center", {0.0, 0.0}}, {"radius", 1.0}}},
                {"check", "monotone"},
                {"order_m", 2},
                {"field", field},
                {"sampling", sampling(o, o.samples)}};
  };
  out.emplace_back("rotation", disk_field("rotation", {{"kind", "rotation"}}));
  out.emplace_back("linear", disk_field("linear", {{"kind", "linear"}, {"a", {{2.0, 1.0}, {-1.0, 1.0}}}}));
  return out;
}

SuiteRow prop31(const SuiteOptions& o) {
  json runs = json::array();
  std::size_t eligible = 0, consistent = 0;
  for (auto [name, cfg] : field_configs(o)) {
    const json mono = run_config(cfg);
    const double beta = std::max(0.0, modulus_of(mono));
    cfg["beta"] = beta;
    if (run_config(cfg)["verdict"] != "PASS") {
      runs.push_back({{"field", name}, {"beta", beta}, {"eligible", false}});
      continue;
    }
    ++eligible;
    cfg["check"] = "pseudomonotone";
    const json pseudo = run_config(cfg);
    const bool ok = pseudo["verdict"] == "PASS";
    consistent += ok;
    runs.push_back({{"field", name}, {"beta", beta}, {"eligible", true}, {"pseudomonotone", pseudo}});
  }

  // The rotation field at beta = 0, starting from the pair (1,0), (0,1).
  json rot{{"name", "rotation_pseudomonotone"},
           {"manifold", {{"kind", "euclidean"}, {"dim", 2}}},
           {"domain", {{"center", {0.0, 0.0}}, {"radius", 1.0}}},
           {"check", "pseudomonotone"},
           {"order_m", 2},
           {"beta", 0.0},
           {"field", {{"kind", "rotation"}}},
           {"sampling", {{"n_pairs", o.samples}, {"seed", o.seed}, {"pinned_pairs", {{{1.0, 0.0}, {0.0, 1.0}}}}}}};
  const json rot_report = run_config(rot);
  bool rotation_ok = rot_report["verdict"] == "FAIL" && !rot_report["witness"].is_null();
  if (rotation_ok) {
    const json& w = rot_report["witness"];
    const auto near = [](const json& p, double a, double b) {
      return std::abs(p[0].get<double>() - a) <= 1e-12 && std::abs(p[1].get<double>() - b) <= 1e-12;
    };
    rotation_ok = near(w["x"], 1.0, 0.0) && near(w["y"], 0.0, 1.0);
  }

  const double rate = eligible ? static_cast<double>(consistent) / static_cast<double>(eligible) : 0.0;
  const bool pass = eligible > 0 && consistent == eligible && rotation_ok;
  return make_row(7, "07_prop31_pseudomonotone", rate, 1.0, 0.0, pass,
                  {{"eligible_fields", eligible},
                   {"pseudomonotone_consistent", consistent},
                   {"rotation_witness_ok", rotation_ok},
                   {"rotation", rot_report},
                   {"fields", runs}});
}

json line_thm41_config(const SuiteOptions& o, double step) {
  json pts = json::array();
  for (const Point& p : catalog::line_points(step)) pts.push_back(to_json(p));
  return json{{"name", "line_biobjective_thm41"},
              {"manifold", {{"kind", "euclidean"}, {"dim", 1}}},
              {"domain", {{"center", {0.0}}, {"radius", 2.0}}},
              {"check", "thm41"},
              {"order_m", 2},
              {"functions",
               {{{"kind", "dist_power"}, {"base", {1.0}}, {"p", 2}}, {{"kind", "dist_power"}, {"base", {-1.0}}, {"p", 2}}}},
              {"vip", {{"grid", {{"samples", 0}, {"points", pts}}}, {"candidates", "grid"}}},
              {"sampling", {{"seed", o.seed}}}};
}

/// inf over a fine grid of [-2, 2] of max((x-1)^2 - (xb-1)^2, (x+1)^2 - (xb+1)^2) / (x - xb)^2.
double line_cstar_oracle(double xb) {
  auto f1 = [](double x) { return (x - 1) * (x - 1); };
  auto f2 = [](double x) { return (x + 1) * (x + 1); };
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 40000; ++i) {
    const double x = -2.0 + 4.0 * i / 40000.0;
    if (std::abs(x - xb) < 1e-12) continue;
    best = std::min(best, std::max(f1(x) - f1(xb), f2(x) - f2(xb)) / ((x - xb) * (x - xb)));
  }
  return best;
}

SuiteRow thm41_line(const SuiteOptions& o) {
  const double step = 0.05;
  const json r = run_config(line_thm41_config(o, step));
  const json& cands = r["details"]["candidates"];
  std::size_t vip_mismatch = 0, strict_mismatch = 0;
  double c0 = std::numeric_limits<double>::quiet_NaN(), c1 = c0;
  for (const auto& c : cands) {
    const double x = c["x"][0].get<double>();
    const bool inside = std::abs(x) <= 1.0 + 1e-12;
    const bool edge = std::abs(std::abs(x) - 1.0) <= step + 1e-12;
    if (c["is_vip_solution"].get<bool>() != inside && !edge) ++vip_mismatch;
    if (c["is_strict_minimizer"].get<bool>() != inside && !edge) ++strict_mismatch;
    if (std::abs(x) < 1e-12) c0 = c["c_star"].get<double>();
    if (std::abs(x - 1.0) < 1e-12) c1 = c["c_star"].get<double>();
  }
  const double o0 = line_cstar_oracle(0.0), o1 = line_cstar_oracle(1.0);
  const double rate = r["details"]["agreement_rate"].get<double>();
  const bool pass = vip_mismatch == 0 && strict_mismatch == 0 && rate == 1.0 && std::abs(c0 - 2.0) <= 0.05 &&
                    std::abs(c1 - 1.0) <= 0.05 && std::abs(c0 - o0) <= 0.05 && std::abs(c1 - o1) <= 0.05;
  return make_row(8, "08_thm41_line", rate, 1.0, 0.0, pass,
                  {{"grid_step", step},
                   {"vip_set_mismatches", vip_mismatch},
                   {"strict_set_mismatches", strict_mismatch},
                   {"c_star_0", c0},
                   {"c_star_1", c1},
                   {"oracle_c_star_0", o0},
                   {"oracle_c_star_1", o1},
                   {"harness", r}});
}

SuiteRow thm41_poincare(const SuiteOptions& o) {
  const auto bi = catalog::poincare_biobjective();
  const Manifold& m = bi.problem.domain().manifold();
  std::vector<Point> segment;
  for (int i = 0; i <= 100; ++i) segment.push_back(m.geodesic_point(bi.a, bi.b, i / 100.0));
  json pinned = json::array(), cands = json::array();
  for (const Point& p : segment) pinned.push_back(to_json(p));
  for (int i = 0; i <= 10; ++i) cands.push_back(to_json(segment[static_cast<std::size_t>(10 * i)]));
  const json cfg{{"name", "poincare_biobjective_thm41"},
                 {"manifold", {{"kind", "poincare_ball"}, {"dim", 2}}},
                 {"domain", {{"center", {0.0, 0.0}}, {"radius", bi.problem.domain().radius()}}},
                 {"check", "thm41"},
                 {"order_m", 2},
                 {"functions",
                  {{{"kind", "dist_power"}, {"base", to_json(bi.a)}, {"p", 2}},
                   {{"kind", "dist_power"}, {"base", to_json(bi.b)}, {"p", 2}}}},
                 {"vip", {{"grid", {{"samples", 1500}, {"points", pinned}}}, {"candidates", cands}, {"candidate_samples", 60}}},
                 {"sampling", {{"seed", o.seed}}}};
  const json r = run_config(cfg);
  const double resolution = r["details"]["resolution"].get<double>();
  std::size_t segment_ok = 0, off_checked = 0, off_ok = 0;
  const json& outcomes = r["details"]["candidates"];
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& c = outcomes[i];
    const bool vip = c["is_vip_solution"].get<bool>(), strict = c["is_strict_minimizer"].get<bool>();
    if (i <= 10) {
      segment_ok += vip && strict;
      continue;
    }
    const Point x = m.point(Vec(Eigen::Map<const Vec>(c["x"].get<std::vector<double>>().data(), 2)));
    double gap = std::numeric_limits<double>::infinity();
    for (const Point& s : segment) gap = std::min(gap, m.distance(x, s));
    if (gap <= 2 * resolution) continue;
    ++off_checked;
    off_ok += !vip && !strict;
  }
  const double rate = r["details"]["agreement_rate"].get<double>();
  const bool pass = rate == 1.0 && segment_ok == 11 && off_ok == off_checked;
  return make_row(9, "09_thm41_poincare", rate, 1.0, 0.0, pass,
                  {{"segment_candidates_ok", segment_ok},
                   {"off_segment_checked", off_checked},
                   {"off_segment_ok", off_ok},
                   {"harness", r}});
}

/// Plain geodesic convexity, checked literally on the plan's samples.
bool plainly_convex(const Function& f, const SamplingPlan& plan) {
  const Manifold& m = f.manifold();
  for (const auto& [x, y] : sample_pairs(f.domain(), plan)) {
    if (m.distance(x, y) < kDegeneratePairDistance) continue;
    for (double t : t_nodes(plan.t_grid)) {
      if (f.value(m.geodesic_point(x, y, t)) > (1 - t) * f.value(x) + t * f.value(y) + plan.guard_eps) return false;
    }
  }
  return true;
}

/// Plain monotonicity, with each pairing taken in its endpoint's tangent space.
bool plainly_monotone(const Field& v, const SamplingPlan& plan) {
  const Manifold& m = v.manifold();
  for (const auto& [x, y] : sample_pairs(v.domain(), plan)) {
    if (m.distance(x, y) < kDegeneratePairDistance) continue;
    const auto [g0, g1] = m.endpoint_velocities(x, y);
    if (m.inner(y, v.eval(y), g1) - m.inner(x, v.eval(x), g0) < -plan.guard_eps) return false;
  }
  return true;
}

SuiteRow reductions(const SuiteOptions& o) {
  SamplingPlan plan;
  plan.seed = o.seed;
  plan.n_pairs = o.samples;

  std::size_t convex_cases = 0, convex_equal = 0, mono_cases = 0, mono_equal = 0;
  std::vector<Field> fields;
  for (const auto& p : catalog::function_presets()) {
    ++convex_cases;
    convex_equal += (check_strong_gconvex(p.function, 2.0, 0.0, plan).verdict == Verdict::Pass) ==
                    plainly_convex(p.function, plan);
    fields.push_back(Field::gradient_of(p.function));
  }
  const Domain disk(Manifold(ManifoldKind::Euclidean, 2), Point{Vec::Zero(2)}, 1.0);
  fields.push_back(Field::rotation(disk));
  fields.push_back(Field::linear(disk, (Mat(2, 2) << 1.0, 3.0, 0.0, -0.5).finished()));
  for (const Field& v : fields) {
    ++mono_cases;
    mono_equal += (check_strong_monotone(v, 2.0, 0.0, plan).verdict == Verdict::Pass) == plainly_monotone(v, plan);
  }

  // Scaling every objective by 3.
  const double lambda = 3.0;
  double worst_scaling = 0.0;
  std::size_t flips = 0, scaled_cases = 0;
  auto compare = [&](const MopProblem& prob, const EvaluationGrid& grid, const std::vector<Point>& cands) {
    MopProblem big{{}, prob.order_m};
    for (const Function& f : prob.objectives) big.objectives.push_back(f.scaled(lambda));
    for (const Point& x : cands) {
      const VipVerdict a = evaluate_candidate(prob, x, grid);
      const VipVerdict b = evaluate_candidate(big, x, grid);
      ++scaled_cases;
      worst_scaling = std::max(worst_scaling, std::abs(b.c_star - lambda * a.c_star) / std::max(1.0, std::abs(lambda * a.c_star)));
      flips += a.is_vip_solution != b.is_vip_solution || a.is_strict_minimizer != b.is_strict_minimizer;
    }
  };
  EvaluationGrid line;
  line.points = catalog::line_points(0.05);
  compare(catalog::line_biobjective(2.0), line, line.points);
  const auto bi = catalog::poincare_biobjective();
  const EvaluationGrid disk_grid = EvaluationGrid::sampled(bi.problem.domain(), 500, o.seed, {bi.a, bi.b});
  compare(bi.problem, disk_grid, sample_domain(bi.problem.domain(), 30, o.seed));

  const bool pass = convex_equal == convex_cases && mono_equal == mono_cases && flips == 0 && worst_scaling <= 1e-12;
  return make_row(10, "10_reductions", worst_scaling, 0.0, 1e-12, pass,
                  {{"convexity_cases", convex_cases},
                   {"convexity_equal", convex_equal},
                   {"monotone_cases", mono_cases},
                   {"monotone_equal", mono_equal},
                   {"scaling_cases", scaled_cases},
                   {"scaling_relative_error", worst_scaling},
                   {"verdict_flips", flips}});
}

SuiteRow determinism(const SuiteOptions& o) {
  json injected = unit_disk_quadratic(o, "convexity", o.samples);
  injected["name"] = "euclid2_sqnorm_injected";
  injected["c"] = 1.01;
  const RunOutcome a = run_scenario(injected);
  const RunOutcome b = run_scenario(injected);
  const json sphere = preset_config("sphere2_cosdist", "convexity", 2.0, o);
  const RunOutcome s1 = run_scenario(sphere);
  const RunOutcome s2 = run_scenario(sphere);

  const bool identical = strip_runtime(a.report).dump() == strip_runtime(b.report).dump() &&
                         strip_runtime(s1.report).dump() == strip_runtime(s2.report).dump();
  const bool has_witness = !a.report.is_null() && !a.report["witness"].is_null();
  const double gap = has_witness ? a.report["witness"]["gap"].get<double>() : std::numeric_limits<double>::quiet_NaN();
  const bool pass = identical && a.exit_code == kExitNegative && has_witness && gap < -1e-9;
  return make_row(11, "11_cli_determinism", gap, -1e-9, 0.0, pass,
                  {{"reports_identical", identical},
                   {"injected_exit_code", a.exit_code},
                   {"injected_witness_gap", has_witness ? json(gap) : json(nullptr)},
                   {"injected", a.report}});
}

}  // namespace

SuiteRow run_suite_row(int criterion, const SuiteOptions& o) {
  switch (criterion) {
    case 1: return geometry_kernels(o);
    case 2: return euclidean_quadratic(o);
    case 3: return poincare_dist2(o);
    case 4: return sphere_cosdist(o);
    case 5: return theorem_battery(5, "thm31", o);
    case 6: return theorem_battery(6, "thm32", o);
    case 7: return prop31(o);
    case 8: return thm41_line(o);
    case 9: return thm41_poincare(o);
    case 10: return reductions(o);
    case 11: return determinism(o);
    default: throw Error(ErrorCode::InvalidArgument, "suite rows are numbered 1.." + std::to_string(kSuiteRows));
  }
}

std::string summary_csv(const std::vector<SuiteRow>& rows) {
  std::ostringstream os;
  os << "scenario,verdict,modulus,expected,tolerance,pass\n";
  for (const auto& r : rows) {
    os << r.scenario << ',' << r.verdict << ',' << json(r.modulus).dump() << ',' << json(r.expected).dump() << ','
       << json(r.tolerance).dump() << ',' << (r.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::filesystem::filesystem_error("cannot open for writing", path, std::make_error_code(std::errc::io_error));
  out << text;
  out.flush();
  if (!out) throw std::filesystem::filesystem_error("write failed", path, std::make_error_code(std::errc::io_error));
}

}  // namespace

int run_suite(const std::filesystem::path& out_dir, const SuiteOptions& options, std::ostream& log) {
  try {
    std::filesystem::create_directories(out_dir);
    // Fail on an unwritable directory before spending time on the battery.
    write_file(out_dir / "summary.csv", "");
  } catch (const std::filesystem::filesystem_error& e) {
    log << "sgc suite: I/O error: " << e.what() << '\n';
    return kExitNumerical;
  }

  std::vector<SuiteRow> rows;
  try {
    for (int i = 1; i <= kSuiteRows; ++i) {
      rows.push_back(run_suite_row(i, options));
      const SuiteRow& r = rows.back();
      log << r.scenario << ' ' << r.verdict << " modulus=" << json(r.modulus).dump() << '\n';
      write_file(out_dir / (r.scenario + ".json"), r.report.dump(2) + "\n");
    }
    write_file(out_dir / "summary.csv", summary_csv(rows));
  } catch (const std::filesystem::filesystem_error& e) {
    log << "sgc suite: I/O error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    log << "sgc suite: " << e.what() << '\n';
    return kExitNumerical;
  }
  const bool all = std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.pass; });
  return all ? kExitPass : kExitNegative;
}

}  // namespace sgc
