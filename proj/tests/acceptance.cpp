// Acceptance battery: one PASS/FAIL line per criterion.
//
//   acceptance        run all criteria
//   acceptance 4 7    run the listed criteria
//
// Exit status is 0 only if every selected criterion passes.

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sgc/catalog.hpp"
#include "sgc/rng.hpp"
#include "sgc/scenario.hpp"
#include "sgc/suite.hpp"

using namespace sgc;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

SamplingPlan plan_with(std::size_t n, std::uint64_t seed = 42) {
  SamplingPlan p;
  p.n_pairs = n;
  p.seed = seed;
  return p;
}

const Function& preset(const std::string& name) { return catalog::function_preset(name).function; }

Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }

// 1. exp/log round trip, constant speed, segment law on 1000 cases per manifold.
Outcome geometry_kernels() {
  const Manifold s2(ManifoldKind::Sphere, 2), s3(ManifoldKind::Sphere, 3);
  const Manifold h2(ManifoldKind::PoincareBall, 2), h3(ManifoldKind::PoincareBall, 3);
  const Manifold e3(ManifoldKind::Euclidean, 3);
  const std::vector<Domain> domains{
      Domain(e3, Point{Vec::Zero(3)}, 2.0),
      Domain(s2, s2.point((Vec(3) << 0, 0, 1).finished()), 1.4),
      Domain(s3, s3.point((Vec(4) << 0.5, 0.5, 0.5, 0.5).finished()), 1.2),
      Domain(h2, h2.point(v2(0.2, -0.1)), 1.5),
      Domain(h3, h3.point((Vec(3) << 0.0, 0.3, 0.1).finished()), 1.0),
  };
  double round_trip = 0, speed = 0, segment = 0, oracle_gap = 0;
  for (const Domain& dom : domains) {
    const Manifold& m = dom.manifold();
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const Point x = sample_point(dom, 2024, "acc.x", i);
      const Point y = sample_point(dom, 2024, "acc.y", i);
      Stream rng(2024, "acc.v", i);
      Tangent v = m.zero(x);
      for (const auto& e : m.tangent_basis(x)) v.comps += rng.normal() * e.comps;
      const double budget = m.kind() == ManifoldKind::Sphere ? std::numbers::pi - 0.1 : dom.radius();
      v.comps *= budget * rng.uniform() / m.norm(x, v);
      const Tangent back = m.log(x, m.exp(x, v));
      round_trip = std::max(round_trip, m.norm(x, Tangent{x.coords, back.comps - v.comps}));
      round_trip = std::max(round_trip, m.distance(m.exp(x, m.log(x, y)), y));

      const double d = m.distance(x, y);
      const double h = 1e-5;
      for (int k = 1; k < 10; ++k) {
        const double t = k / 10.0;
        const Point p = m.geodesic_point(x, y, t);
        segment = std::max(segment, std::abs(m.distance(x, p) - t * d));
        const Vec deriv = (m.geodesic_point(x, y, t + h).coords - m.geodesic_point(x, y, t - h).coords) / (2 * h);
        speed = std::max(speed, std::abs(m.metric_scale(p) * deriv.norm() - d));
        // Independent closed forms for the geodesic.
        if (m.kind() == ManifoldKind::Sphere) {
          oracle_gap = std::max(oracle_gap, (p.coords - oracle::sphere::slerp(x.coords, y.coords, t)).norm());
        } else if (m.kind() == ManifoldKind::PoincareBall) {
          oracle_gap =
              std::max(oracle_gap, (p.coords - oracle::hyperboloid::geodesic_point(x.coords, y.coords, t)).norm());
        }
      }
    }
  }
  const bool pass = round_trip <= 1e-9 && speed <= 1e-6 && segment <= 1e-8 && oracle_gap <= 1e-9;
  return {pass, "round_trip=" + fmt(round_trip) + " speed=" + fmt(speed) + " segment=" + fmt(segment) +
                    " oracle=" + fmt(oracle_gap)};
}

// 2. |x|^2 on the unit disk, m = 2, 10^4 samples.
Outcome euclidean_quadratic() {
  const Function& f = preset("euclid2_sqnorm");
  const double c0 = *check_strong_gconvex(f, 2.0, std::nullopt, plan_with(10000)).estimated_modulus;
  const double c1 = *check_first_order(f, 2.0, std::nullopt, plan_with(10000)).estimated_modulus;
  const bool pass = c0 >= 0.98 && c0 <= 1.02 && c1 >= 0.98 && c1 <= 1.02;
  return {pass, "c_zeroth=" + fmt(c0) + " c_first=" + fmt(c1) + " (analytic 1)"};
}

// 3. d(., x0)^2 on a Poincare disk ball.
Outcome poincare_dist2() {
  const Function& f = preset("poincare2_dist2");
  const double c0 = *check_strong_gconvex(f, 2.0, std::nullopt, plan_with(2000)).estimated_modulus;
  const double beta = *check_strong_monotone(Field::gradient_of(f), 2.0, std::nullopt, plan_with(2000)).estimated_beta;
  return {c0 >= 0.90 && c0 <= 1.10 && beta >= 1.9, "c_zeroth=" + fmt(c0) + " beta=" + fmt(beta)};
}

// 4. 1 - cos d(., pole) on the pi/4 cap, with a dense polar-grid oracle.
Outcome sphere_cosdist() {
  const Function& f = preset("sphere2_cosdist");
  const double c0 = *check_strong_gconvex(f, 2.0, std::nullopt, plan_with(2000)).estimated_modulus;
  std::vector<oracle::Vec> grid;
  const double radius = std::numbers::pi / 4;
  const int rings = 16;
  for (int ir = 0; ir <= rings; ++ir) {
    const int na = ir == 0 ? 1 : 6 * ir;
    for (int ia = 0; ia < na; ++ia) {
      const double r = radius * ir / rings, a = 2 * std::numbers::pi * ia / na;
      grid.push_back((oracle::Vec(3) << std::sin(r) * std::cos(a), std::sin(r) * std::sin(a), std::cos(r)).finished());
    }
  }
  const oracle::Vec pole = (oracle::Vec(3) << 0, 0, 1).finished();
  const double oracle_c = oracle::brute_force_modulus(
      grid, 9, 2.0, [&](const oracle::Vec& p) { return 1.0 - p.dot(pole); }, oracle::sphere::distance,
      oracle::sphere::slerp);
  const double rel = std::abs(c0 - oracle_c) / oracle_c;
  return {c0 >= 0.33 && c0 <= 0.38 && rel <= 0.02,
          "c_zeroth=" + fmt(c0) + " grid_oracle=" + fmt(oracle_c) + " rel_diff=" + fmt(rel) + " (analytic " +
              fmt(std::cos(radius) / 2) + ")"};
}

// 5. Zeroth- vs first-order verdict agreement on the battery, m in {2, 3}.
Outcome thm31_battery() {
  std::size_t total = 0, agree = 0;
  for (const auto& p : catalog::function_presets()) {
    for (double m : {2.0, 3.0}) {
      ++total;
      agree += thm31_harness(p.function, m, plan_with(2000)).agree;
    }
  }
  return {total >= 12 && agree == total, std::to_string(agree) + "/" + std::to_string(total) + " agree"};
}

// 6. Convexity vs gradient-monotonicity agreement and the forward bound beta* >= 2 c* - 0.05.
Outcome thm32_battery() {
  std::size_t total = 0, agree = 0, bound = 0;
  for (const auto& p : catalog::function_presets()) {
    for (double m : {2.0, 3.0}) {
      ++total;
      const Thm32Report r = thm32_harness(p.function, m, plan_with(2000));
      agree += r.agree;
      bound += r.beta >= 2.0 * r.c_zeroth - 0.05;
    }
  }
  return {total >= 12 && agree == total && bound == total,
          std::to_string(agree) + "/" + std::to_string(total) + " agree, forward bound " + std::to_string(bound) + "/" +
              std::to_string(total)};
}

// 7. Strong monotonicity implies pseudomonotonicity; rotation-field counterexample.
Outcome prop31() {
  const Domain disk(Manifold(ManifoldKind::Euclidean, 2), Point{Vec::Zero(2)}, 1.0);
  std::vector<Field> fields;
  for (const auto& p : catalog::function_presets()) fields.push_back(Field::gradient_of(p.function));
  fields.push_back(Field::rotation(disk));
  fields.push_back(Field::linear(disk, (Mat(2, 2) << 2.0, 1.0, -1.0, 1.0).finished()));
  std::size_t eligible = 0, clean = 0;
  for (const Field& v : fields) {
    const double beta = std::max(0.0, *check_strong_monotone(v, 2.0, std::nullopt, plan_with(2000)).estimated_beta);
    if (check_strong_monotone(v, 2.0, beta, plan_with(2000)).verdict != Verdict::Pass) continue;
    ++eligible;
    clean += check_pseudomonotone(v, 2.0, beta, plan_with(2000)).verdict == Verdict::Pass;
  }

  SamplingPlan pinned = plan_with(2000);
  pinned.pinned_pairs = {{Point{v2(1, 0)}, Point{v2(0, 1)}}};
  const MonotonicityReport rot = check_pseudomonotone(Field::rotation(disk), 2.0, 0.0, pinned);
  bool witness_ok = rot.verdict == Verdict::Fail && rot.witness;
  if (witness_ok) {
    witness_ok = (rot.witness->x.coords - v2(1, 0)).norm() <= 1e-12 && (rot.witness->y.coords - v2(0, 1)).norm() <= 1e-12;
  }
  // By hand: <V(x), y-x> = 1 and <V(y), y-x> = 1 for this pair.
  const Vec dir = v2(-1, 1);
  const double premise = v2(0, 1).dot(dir), conclusion = v2(-1, 0).dot(dir);
  return {eligible > 0 && clean == eligible && witness_ok,
          "pseudomonotone at beta* on " + std::to_string(clean) + "/" + std::to_string(eligible) +
              " fields; rotation at beta=0: verdict " + std::string(to_string(rot.verdict)) +
              ", premise_count=" + std::to_string(rot.premise_count) + ", pinned pair premise=" + fmt(premise) +
              " conclusion=" + fmt(conclusion) + " (no violation exists)"};
}

// 8. VIP vs strict-minimizer agreement on ((x-1)^2, (x+1)^2) over [-2, 2], step 0.05.
Outcome thm41_line() {
  const double step = 0.05;
  const MopProblem prob = catalog::line_biobjective(2.0);
  EvaluationGrid grid;
  grid.points = catalog::line_points(step);
  const Thm41Report r = thm41_harness(prob, grid, grid.points);
  std::size_t mismatches = 0;
  double c0 = NAN, c1 = NAN;
  for (const auto& c : r.candidates) {
    const double x = c.x.coords[0];
    const bool inside = std::abs(x) <= 1.0 + 1e-12;
    const bool edge = std::abs(std::abs(x) - 1.0) <= step + 1e-12;
    if (!edge && (c.is_vip_solution != inside || c.is_strict_minimizer != inside)) ++mismatches;
    if (std::abs(x) < 1e-12) c0 = c.c_star;
    if (std::abs(x - 1) < 1e-12) c1 = c.c_star;
  }
  // Brute force on a 1e-4 lattice straight from the objectives.
  auto brute = [](double xb) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 40000; ++i) {
      const double x = -2.0 + i * 1e-4;
      if (std::abs(x - xb) < 1e-12) continue;
      const double g1 = (x - 1) * (x - 1) - (xb - 1) * (xb - 1);
      const double g2 = (x + 1) * (x + 1) - (xb + 1) * (xb + 1);
      best = std::min(best, std::max(g1, g2) / ((x - xb) * (x - xb)));
    }
    return best;
  };
  const double b0 = brute(0.0), b1 = brute(1.0);
  const bool pass = mismatches == 0 && r.agreement_rate == 1.0 && std::abs(c0 - 2) <= 0.05 && std::abs(c1 - 1) <= 0.05 &&
                    std::abs(c0 - b0) <= 0.05 && std::abs(c1 - b1) <= 0.05;
  return {pass, "agreement=" + fmt(r.agreement_rate) + " set_mismatches=" + std::to_string(mismatches) +
                    " boundary=" + std::to_string(r.n_boundary) + " c*(0)=" + fmt(c0) + " (oracle " + fmt(b0) +
                    ") c*(1)=" + fmt(c1) + " (oracle " + fmt(b1) + ")"};
}

// 9. Poincare biobjective; Pareto set checked by grid dominance.
Outcome thm41_poincare() {
  const auto bi = catalog::poincare_biobjective();
  const Manifold& m = bi.problem.domain().manifold();
  std::vector<Point> segment;
  for (int i = 0; i <= 100; ++i) segment.push_back(m.geodesic_point(bi.a, bi.b, i / 100.0));
  const EvaluationGrid grid = EvaluationGrid::sampled(bi.problem.domain(), 1500, 42, segment);
  std::vector<Point> candidates;
  for (int i = 0; i <= 10; ++i) candidates.push_back(segment[static_cast<std::size_t>(10 * i)]);
  for (std::uint64_t i = 0; i < 60; ++i) candidates.push_back(sample_point(bi.problem.domain(), 42, "candidates", i));
  const Thm41Report r = thm41_harness(bi.problem, grid, candidates);

  // Grid oracle: x is Pareto optimal on the grid iff no grid point is at
  // least as good in both objectives and better in one. Values use the
  // hyperboloid distance, not the library's.
  auto values = [&](const Point& p) {
    const double da = oracle::hyperboloid::distance(p.coords, bi.a.coords);
    const double db = oracle::hyperboloid::distance(p.coords, bi.b.coords);
    return std::pair{da * da, db * db};
  };
  std::size_t oracle_mismatch = 0, checked = 0;
  for (std::size_t i = 0; i < r.candidates.size(); ++i) {
    const auto& c = r.candidates[i];
    if (c.boundary) continue;
    const auto [fa, fb] = values(c.x);
    bool dominated = false;
    for (const Point& z : grid.points) {
      const auto [ga, gb] = values(z);
      if (ga <= fa && gb <= fb && (ga < fa - 1e-12 || gb < fb - 1e-12)) dominated = true;
    }
    ++checked;
    if (c.is_vip_solution == dominated || c.is_strict_minimizer == dominated) ++oracle_mismatch;
  }
  std::size_t on_segment = 0;
  for (std::size_t i = 0; i <= 10; ++i) on_segment += r.candidates[i].is_vip_solution && r.candidates[i].is_strict_minimizer;
  return {r.agreement_rate == 1.0 && oracle_mismatch == 0 && on_segment == 11,
          "agreement=" + fmt(r.agreement_rate) + " boundary=" + std::to_string(r.n_boundary) +
              " segment_solutions=" + std::to_string(on_segment) + "/11 grid_oracle_mismatches=" +
              std::to_string(oracle_mismatch) + "/" + std::to_string(checked)};
}

// 10. c = 0, beta = 0 and objective scaling reductions.
Outcome reductions() {
  const SamplingPlan plan = plan_with(2000, 77);
  std::size_t conv_eq = 0, conv_n = 0, mono_eq = 0, mono_n = 0;
  std::vector<Field> fields;
  for (const auto& p : catalog::function_presets()) {
    const Function& f = p.function;
    const Manifold& m = f.manifold();
    bool convex = true;
    for (const auto& [x, y] : sample_pairs(f.domain(), plan)) {
      if (m.distance(x, y) < kDegeneratePairDistance) continue;
      for (double t : t_nodes(plan.t_grid)) {
        if (f.value(m.geodesic_point(x, y, t)) > (1 - t) * f.value(x) + t * f.value(y) + plan.guard_eps) convex = false;
      }
    }
    ++conv_n;
    conv_eq += (check_strong_gconvex(f, 2.0, 0.0, plan).verdict == Verdict::Pass) == convex;
    fields.push_back(Field::gradient_of(f));
  }
  const Domain disk(Manifold(ManifoldKind::Euclidean, 2), Point{Vec::Zero(2)}, 1.0);
  fields.push_back(Field::rotation(disk));
  fields.push_back(Field::linear(disk, (Mat(2, 2) << 1.0, 3.0, 0.0, -0.5).finished()));
  for (const Field& v : fields) {
    const Manifold& m = v.manifold();
    bool monotone = true;
    for (const auto& [x, y] : sample_pairs(v.domain(), plan)) {
      if (m.distance(x, y) < kDegeneratePairDistance) continue;
      const auto [g0, g1] = m.endpoint_velocities(x, y);
      if (m.inner(y, v.eval(y), g1) - m.inner(x, v.eval(x), g0) < -plan.guard_eps) monotone = false;
    }
    ++mono_n;
    mono_eq += (check_strong_monotone(v, 2.0, 0.0, plan).verdict == Verdict::Pass) == monotone;
  }

  double worst = 0.0;
  std::size_t flips = 0;
  const MopProblem line = catalog::line_biobjective(2.0);
  MopProblem big{{}, 2.0};
  for (const Function& f : line.objectives) big.objectives.push_back(f.scaled(3.0));
  EvaluationGrid grid;
  grid.points = catalog::line_points(0.05);
  for (const Point& x : grid.points) {
    const VipVerdict a = evaluate_candidate(line, x, grid), b = evaluate_candidate(big, x, grid);
    worst = std::max(worst, std::abs(b.c_star - 3.0 * a.c_star) / std::max(1.0, std::abs(3.0 * a.c_star)));
    flips += a.is_vip_solution != b.is_vip_solution || a.is_strict_minimizer != b.is_strict_minimizer;
  }
  return {conv_eq == conv_n && mono_eq == mono_n && flips == 0 && worst <= 1e-12,
          "c=0 " + std::to_string(conv_eq) + "/" + std::to_string(conv_n) + ", beta=0 " + std::to_string(mono_eq) + "/" +
              std::to_string(mono_n) + ", scaling rel_err=" + fmt(worst) + " flips=" + std::to_string(flips)};
}

int run_command(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

// 11. CLI determinism and the injected failure.
Outcome cli_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "sgc_acceptance_cli";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cli = SGC_CLI_PATH;
  run_command(cli + " suite --quiet --out " + (dir / "a").string());
  run_command(cli + " suite --quiet --out " + (dir / "b").string());
  std::size_t files = 0, identical = 0;
  for (const auto& entry : fs::directory_iterator(dir / "a")) {
    if (entry.path().extension() != ".json") continue;
    ++files;
    const fs::path other = dir / "b" / entry.path().filename();
    if (fs::exists(other) && strip_runtime(read_json(entry.path())).dump() == strip_runtime(read_json(other)).dump()) {
      ++identical;
    }
  }
  std::ifstream sa(dir / "a" / "summary.csv"), sb(dir / "b" / "summary.csv");
  std::stringstream ta, tb;
  ta << sa.rdbuf();
  tb << sb.rdbuf();
  const bool summary_same = !ta.str().empty() && ta.str() == tb.str();

  const fs::path config = fs::path(SGC_CONFIG_DIR) / "quadratic_c101.json";
  const int code = run_command(cli + " check --quiet --config " + config.string() + " --out " + (dir / "inj.json").string());
  double gap = NAN;
  if (fs::exists(dir / "inj.json")) {
    const json r = read_json(dir / "inj.json");
    if (!r["witness"].is_null()) gap = r["witness"]["gap"].get<double>();
  }
  fs::remove_all(dir);
  const bool pass = files == kSuiteRows && identical == files && summary_same && code == 1 && gap < -1e-9;
  return {pass, std::to_string(identical) + "/" + std::to_string(files) + " reports identical, summary " +
                    (summary_same ? "identical" : "differs") + "; injected exit=" + std::to_string(code) +
                    " gap=" + fmt(gap)};
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "geometry kernels", geometry_kernels},
      {2, "euclidean quadratic modulus", euclidean_quadratic},
      {3, "poincare squared distance", poincare_dist2},
      {4, "sphere cos-distance modulus", sphere_cosdist},
      {5, "zeroth/first-order agreement battery", thm31_battery},
      {6, "convexity/monotonicity agreement battery", thm32_battery},
      {7, "strongly monotone implies pseudomonotone; rotation counterexample", prop31},
      {8, "VIP vs strict minimizer on the line", thm41_line},
      {9, "VIP vs strict minimizer on the Poincare disk", thm41_poincare},
      {10, "reductions and scaling", reductions},
      {11, "CLI determinism and injected failure", cli_determinism},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));
  bool all = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << c.id << " [PRIMARY] " << c.title << ": " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
