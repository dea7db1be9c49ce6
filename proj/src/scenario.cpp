#include "sgc/scenario.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "sgc/catalog.hpp"
#include "sgc/errors.hpp"

namespace sgc {

using nlohmann::json;

std::string_view to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::Convexity: return "convexity";
    case CheckKind::FirstOrder: return "first_order";
    case CheckKind::Monotone: return "monotone";
    case CheckKind::Pseudomonotone: return "pseudomonotone";
    case CheckKind::Vip: return "vip";
    case CheckKind::Thm31: return "thm31";
    case CheckKind::Thm32: return "thm32";
    case CheckKind::Thm41: return "thm41";
  }
  return "unknown";
}

namespace {

std::string join_problems(const std::vector<std::string>& problems) {
  std::string out = "invalid config";
  for (const auto& p : problems) out += "\n  " + p;
  return out;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error(join_problems(problems)), problems_(std::move(problems)) {}

namespace {

/// A single validation failure, caught and recorded by Collector::attempt.
struct Invalid {
  std::string message;
};

class Collector {
 public:
  template <class F>
  auto attempt(const std::string& where, F&& fn) -> std::optional<decltype(fn())> {
    try {
      return fn();
    } catch (const Invalid& e) {
      add(where, e.message);
    } catch (const Error& e) {
      add(where, e.what());
    } catch (const json::exception& e) {
      add(where, e.what());
    }
    return std::nullopt;
  }

  void add(const std::string& where, const std::string& message) { problems_.push_back(where + ": " + message); }
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

const json* find(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double read_number(const json& j, const std::string& what) {
  if (!j.is_number()) throw Invalid{what + " must be a number"};
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw Invalid{what + " must be finite"};
  return v;
}

std::size_t read_count(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw Invalid{what + " must be a non-negative integer"};
  return j.get<std::size_t>();
}

Vec read_vec(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw Invalid{what + " must be a non-empty array of numbers"};
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = read_number(j[i], what);
  return v;
}

Mat read_mat(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw Invalid{what + " must be a non-empty array of rows"};
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Mat m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const Vec row = read_vec(j[r], what);
    if (static_cast<std::size_t>(row.size()) != cols) throw Invalid{what + " rows must have equal length"};
    m.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return m;
}

Point read_point(const json& j, const Domain& domain, const std::string& what) {
  Point p = domain.manifold().point(read_vec(j, what));
  if (!domain.contains(p)) throw Invalid{what + " lies outside the domain ball"};
  return p;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where,
                         Collector& errors) {
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items()) {
    if (!ok.count(key)) errors.add(where, "unknown key '" + key + "'");
  }
}

std::optional<CheckKind> check_kind_from_string(const std::string& s) {
  for (CheckKind k : {CheckKind::Convexity, CheckKind::FirstOrder, CheckKind::Monotone, CheckKind::Pseudomonotone,
                      CheckKind::Vip, CheckKind::Thm31, CheckKind::Thm32, CheckKind::Thm41}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

Function read_function(const json& j, const Domain& domain, const std::string& where) {
  if (!j.is_object()) throw Invalid{"function must be an object"};
  const json* kind = find(j, "kind");
  if (!kind || !kind->is_string()) throw Invalid{"function needs a string 'kind'"};
  const std::string k = kind->get<std::string>();
  auto need = [&](const char* key) -> const json& {
    const json* v = find(j, key);
    if (!v) throw Invalid{"function kind '" + k + "' needs '" + key + "'"};
    return *v;
  };
  std::optional<Function> f;
  if (k == "quadratic") {
    const json* b = find(j, "b");
    const json* off = find(j, "offset");
    const Mat q = read_mat(need("q"), "q");
    f = Function::quadratic(domain, q, b ? read_vec(*b, "b") : Vec::Zero(q.rows()), off ? read_number(*off, "offset") : 0.0);
  } else if (k == "linear") {
    f = Function::linear(domain, read_vec(need("a"), "a"));
  } else if (k == "dist_power") {
    const json* p = find(j, "p");
    f = Function::dist_power(domain, domain.manifold().point(read_vec(need("base"), "base")), p ? read_number(*p, "p") : 2.0);
  } else if (k == "cos_dist") {
    f = Function::cos_dist(domain, domain.manifold().point(read_vec(need("base"), "base")));
  } else if (k == "expression") {
    const json& e = need("expr");
    if (!e.is_string()) throw Invalid{"expr must be a string"};
    f = Function::expression(domain, e.get<std::string>());
  } else {
    throw Invalid{"unknown function kind '" + k + "'"};
  }
  if (const json* s = find(j, "scale")) f = f->scaled(read_number(*s, where + ".scale"));
  return *f;
}

Field read_field(const json& j, const Domain& domain, const std::optional<Function>& function) {
  if (!j.is_object()) throw Invalid{"field must be an object"};
  const json* kind = find(j, "kind");
  if (!kind || !kind->is_string()) throw Invalid{"field needs a string 'kind'"};
  const std::string k = kind->get<std::string>();
  if (k == "gradient_of") {
    if (const json* f = find(j, "function")) return Field::gradient_of(read_function(*f, domain, "field.function"));
    if (!function) throw Invalid{"gradient_of needs 'function' here or at the top level"};
    return Field::gradient_of(*function);
  }
  if (k == "linear") {
    const json* a = find(j, "a");
    if (!a) throw Invalid{"linear field needs 'a'"};
    return Field::linear(domain, read_mat(*a, "a"));
  }
  if (k == "rotation") return Field::rotation(domain);
  if (k == "expression") {
    const json* comps = find(j, "components");
    if (!comps || !comps->is_array()) throw Invalid{"expression field needs an array 'components'"};
    std::vector<std::string> texts;
    for (const auto& c : *comps) {
      if (!c.is_string()) throw Invalid{"field components must be strings"};
      texts.push_back(c.get<std::string>());
    }
    return Field::expression(domain, texts);
  }
  throw Invalid{"unknown field kind '" + k + "'"};
}

SamplingPlan read_sampling(const json* j, const Overrides& overrides, Collector& errors,
                           const std::optional<Domain>& domain) {
  SamplingPlan plan;
  if (j) {
    if (!j->is_object()) {
      errors.add("sampling", "must be an object");
    } else {
      reject_unknown_keys(*j, {"n_pairs", "t_grid", "seed", "guard_eps", "pinned_pairs"}, "sampling", errors);
      if (const json* v = find(*j, "n_pairs")) errors.attempt("sampling.n_pairs", [&] { return plan.n_pairs = read_count(*v, "n_pairs"); });
      if (const json* v = find(*j, "t_grid")) errors.attempt("sampling.t_grid", [&] { return plan.t_grid = read_count(*v, "t_grid"); });
      if (const json* v = find(*j, "seed")) {
        errors.attempt("sampling.seed", [&] {
          if (!v->is_number_integer() || v->get<long long>() < 0) throw Invalid{"seed must be a non-negative integer"};
          return plan.seed = v->get<std::uint64_t>();
        });
      }
      if (const json* v = find(*j, "guard_eps")) errors.attempt("sampling.guard_eps", [&] { return plan.guard_eps = read_number(*v, "guard_eps"); });
      if (const json* v = find(*j, "pinned_pairs")) {
        if (!v->is_array()) {
          errors.add("sampling.pinned_pairs", "must be an array of [x, y] pairs");
        } else if (domain) {
          for (std::size_t i = 0; i < v->size(); ++i) {
            const std::string where = "sampling.pinned_pairs[" + std::to_string(i) + "]";
            errors.attempt(where, [&] {
              const json& pair = (*v)[i];
              if (!pair.is_array() || pair.size() != 2) throw Invalid{"must be [x, y]"};
              plan.pinned_pairs.emplace_back(read_point(pair[0], *domain, "x"), read_point(pair[1], *domain, "y"));
              return true;
            });
          }
        }
      }
    }
  }
  if (overrides.seed) plan.seed = *overrides.seed;
  if (overrides.samples) plan.n_pairs = *overrides.samples;
  errors.attempt("sampling", [&] {
    plan.validate();
    return true;
  });
  return plan;
}

json pinned_to_json(const SamplingPlan& plan) {
  json out = json::array();
  for (const auto& [x, y] : plan.pinned_pairs) out.push_back(json::array({to_json(x), to_json(y)}));
  return out;
}

}  // namespace

json to_json(const Point& p) {
  json out = json::array();
  for (Eigen::Index i = 0; i < p.coords.size(); ++i) out.push_back(p.coords[i]);
  return out;
}

json to_json(const Witness& w) {
  return json{{"x", to_json(w.x)}, {"y", to_json(w.y)}, {"t", w.t ? json(*w.t) : json(nullptr)},
              {"lhs", w.lhs},      {"rhs", w.rhs},      {"gap", w.gap}};
}

Scenario parse_scenario(const json& config, const Overrides& overrides) {
  if (!config.is_object()) throw ConfigError({"config: must be a JSON object"});
  Collector errors;
  Scenario s;
  reject_unknown_keys(config,
                      {"name", "preset", "manifold", "domain", "check", "order_m", "c", "beta", "function", "functions",
                       "field", "vip", "sampling", "output"},
                      "config", errors);

  if (const json* v = find(config, "name")) {
    if (v->is_string()) s.name = v->get<std::string>();
    else errors.add("name", "must be a string");
  }

  std::optional<CheckKind> check;
  if (const json* v = find(config, "check"); v && v->is_string()) {
    check = check_kind_from_string(v->get<std::string>());
    if (!check) errors.add("check", "unknown check kind '" + v->get<std::string>() + "'");
  } else {
    errors.add("check", "required, one of convexity, first_order, monotone, pseudomonotone, vip, thm31, thm32, thm41");
  }

  std::optional<Domain> domain;
  const json* preset = find(config, "preset");
  if (preset) {
    errors.attempt("preset", [&] {
      if (!preset->is_string()) throw Invalid{"must be a string"};
      if (find(config, "manifold") || find(config, "domain") || find(config, "function")) {
        throw Invalid{"a preset supplies manifold, domain and function; do not repeat them"};
      }
      const auto& p = catalog::function_preset(preset->get<std::string>());
      domain = p.function.domain();
      s.function = p.function;
      return true;
    });
  } else {
    std::optional<Manifold> manifold;
    if (const json* m = find(config, "manifold"); m && m->is_object()) {
      reject_unknown_keys(*m, {"kind", "dim"}, "manifold", errors);
      manifold = errors.attempt("manifold", [&] {
        const json* kind = find(*m, "kind");
        const json* dim = find(*m, "dim");
        if (!kind || !kind->is_string()) throw Invalid{"needs a string 'kind'"};
        if (!dim || !dim->is_number_integer()) throw Invalid{"needs an integer 'dim'"};
        return Manifold(manifold_kind_from_string(kind->get<std::string>()), dim->get<int>());
      });
    } else {
      errors.add("manifold", "required object {kind, dim} unless a preset is given");
    }
    if (const json* d = find(config, "domain"); d && d->is_object()) {
      reject_unknown_keys(*d, {"center", "radius"}, "domain", errors);
      if (manifold) {
        domain = errors.attempt("domain", [&] {
          const json* center = find(*d, "center");
          const json* radius = find(*d, "radius");
          if (!center) throw Invalid{"needs 'center'"};
          if (!radius) throw Invalid{"needs 'radius'"};
          return Domain(*manifold, manifold->point(read_vec(*center, "center")), read_number(*radius, "radius"));
        });
      }
    } else {
      errors.add("domain", "required object {center, radius} unless a preset is given");
    }
    if (const json* f = find(config, "function"); f && domain) {
      s.function = errors.attempt("function", [&] { return read_function(*f, *domain, "function"); });
    }
  }

  if (const json* v = find(config, "order_m")) {
    errors.attempt("order_m", [&] {
      s.order_m = read_number(*v, "order_m");
      require_order(s.order_m);
      return true;
    });
  }
  if (const json* v = find(config, "c")) {
    errors.attempt("c", [&] {
      const double c = read_number(*v, "c");
      if (c < 0.0) throw Invalid{"must be >= 0"};
      return s.c = c;
    });
  }
  if (const json* v = find(config, "beta")) {
    errors.attempt("beta", [&] {
      const double b = read_number(*v, "beta");
      if (b < 0.0) throw Invalid{"must be >= 0"};
      return s.beta = b;
    });
  }
  if (const json* v = find(config, "output")) {
    if (v->is_string()) s.output = v->get<std::string>();
    else errors.add("output", "must be a string path");
  }

  s.plan = read_sampling(find(config, "sampling"), overrides, errors, domain);

  if (check && domain) {
    s.check = *check;
    switch (*check) {
      case CheckKind::Convexity:
      case CheckKind::FirstOrder:
      case CheckKind::Thm31:
      case CheckKind::Thm32:
        if (!s.function && errors.problems().empty()) errors.add("function", "required for check '" + std::string(to_string(*check)) + "'");
        break;
      case CheckKind::Monotone:
      case CheckKind::Pseudomonotone:
        if (const json* f = find(config, "field")) {
          s.field = errors.attempt("field", [&] { return read_field(*f, *domain, s.function); });
        } else {
          errors.add("field", "required for check '" + std::string(to_string(*check)) + "'");
        }
        break;
      case CheckKind::Vip:
      case CheckKind::Thm41: {
        const json* fs = find(config, "functions");
        if (!fs || !fs->is_array() || fs->empty()) {
          errors.add("functions", "required non-empty array for check '" + std::string(to_string(*check)) + "'");
        } else {
          MopProblem problem{{}, s.order_m};
          bool ok = true;
          for (std::size_t i = 0; i < fs->size(); ++i) {
            const std::string where = "functions[" + std::to_string(i) + "]";
            auto f = errors.attempt(where, [&] { return read_function((*fs)[i], *domain, where); });
            if (f) problem.objectives.push_back(std::move(*f));
            else ok = false;
          }
          if (ok) s.problem = std::move(problem);
        }
        const json* vip = find(config, "vip");
        if (!vip || !vip->is_object()) {
          errors.add("vip", "required object for check '" + std::string(to_string(*check)) + "'");
          break;
        }
        reject_unknown_keys(*vip, {"xbar", "candidates", "candidate_samples", "grid"}, "vip", errors);
        std::size_t grid_samples = s.plan.n_pairs;
        std::vector<Point> grid_points;
        if (const json* g = find(*vip, "grid")) {
          if (!g->is_object()) {
            errors.add("vip.grid", "must be an object");
          } else {
            reject_unknown_keys(*g, {"samples", "points", "resolution"}, "vip.grid", errors);
            if (const json* n = find(*g, "samples")) errors.attempt("vip.grid.samples", [&] { return grid_samples = read_count(*n, "samples"); });
            if (const json* pts = find(*g, "points")) {
              errors.attempt("vip.grid.points", [&] {
                if (!pts->is_array()) throw Invalid{"must be an array of points"};
                for (const auto& p : *pts) grid_points.push_back(read_point(p, *domain, "grid point"));
                return true;
              });
            }
            if (const json* r = find(*g, "resolution")) {
              errors.attempt("vip.grid.resolution", [&] {
                const double res = read_number(*r, "resolution");
                if (!(res > 0.0)) throw Invalid{"must be positive"};
                return s.grid.resolution = res;
              });
            }
          }
        }
        if (overrides.samples && grid_samples > 0) grid_samples = *overrides.samples;
        if (grid_points.empty() && grid_samples == 0) errors.add("vip.grid", "needs points or samples > 0");
        const std::optional<double> resolution = s.grid.resolution;
        s.grid = EvaluationGrid::sampled(*domain, grid_samples, s.plan.seed, std::move(grid_points));
        s.grid.resolution = resolution;
        s.grid.guard_eps = s.plan.guard_eps;

        if (*check == CheckKind::Vip) {
          if (const json* x = find(*vip, "xbar")) {
            s.xbar = errors.attempt("vip.xbar", [&] { return read_point(*x, *domain, "xbar"); });
          } else {
            errors.add("vip.xbar", "required for check 'vip'");
          }
        } else {
          if (const json* c = find(*vip, "candidates")) {
            if (c->is_string() && c->get<std::string>() == "grid") {
              s.candidates = s.grid.points;
            } else {
              errors.attempt("vip.candidates", [&] {
                if (!c->is_array()) throw Invalid{"must be an array of points or \"grid\""};
                for (const auto& p : *c) s.candidates.push_back(read_point(p, *domain, "candidate"));
                return true;
              });
            }
          }
          if (const json* n = find(*vip, "candidate_samples")) {
            errors.attempt("vip.candidate_samples", [&] {
              const std::size_t count = read_count(*n, "candidate_samples");
              for (std::size_t i = 0; i < count; ++i) s.candidates.push_back(sample_point(*domain, s.plan.seed, "candidates", i));
              return true;
            });
          }
          if (s.candidates.empty()) errors.add("vip", "thm41 needs 'candidates' or 'candidate_samples'");
        }
        break;
      }
    }
  }

  if (s.check == CheckKind::Pseudomonotone && !s.beta) s.beta = 0.0;

  if (!errors.problems().empty()) throw ConfigError(errors.problems());

  s.echo = config;
  s.echo["sampling"]["seed"] = s.plan.seed;
  s.echo["sampling"]["n_pairs"] = s.plan.n_pairs;
  s.echo["sampling"]["t_grid"] = s.plan.t_grid;
  s.echo["sampling"]["guard_eps"] = s.plan.guard_eps;
  if (!s.plan.pinned_pairs.empty()) s.echo["sampling"]["pinned_pairs"] = pinned_to_json(s.plan);
  if (overrides.samples && s.echo.contains("vip") && s.echo["vip"].contains("grid") &&
      s.echo["vip"]["grid"].contains("samples")) {
    s.echo["vip"]["grid"]["samples"] = *overrides.samples;
  }
  return s;
}

namespace {

json check_report_json(const CheckReport& r) {
  return json{{"verdict", to_string(r.verdict)},
              {"estimated_modulus", r.estimated_modulus ? json(*r.estimated_modulus) : json(nullptr)},
              {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
              {"n_evaluated", r.n_evaluated},
              {"skipped_degenerate", r.skipped_degenerate},
              {"skipped_cut_locus", r.skipped_cut_locus},
              {"runtime_ms", r.runtime_ms}};
}

json monotonicity_report_json(const MonotonicityReport& r) {
  return json{{"verdict", to_string(r.verdict)},
              {"estimated_modulus", r.estimated_beta ? json(*r.estimated_beta) : json(nullptr)},
              {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
              {"n_evaluated", r.n_evaluated},
              {"skipped_degenerate", r.skipped_degenerate},
              {"skipped_cut_locus", r.skipped_cut_locus},
              {"premise_count", r.premise_count},
              {"vacuous", r.vacuous},
              {"runtime_ms", r.runtime_ms}};
}

/// Top-level fields shared by all checks, filled from a sub-report.
void adopt(json& report, const json& sub) {
  for (const char* key : {"verdict", "estimated_modulus", "witness", "n_evaluated", "skipped_degenerate", "skipped_cut_locus"}) {
    report[key] = sub.at(key);
  }
}

}  // namespace

json run_check(const Scenario& s) {
  const auto start = std::chrono::steady_clock::now();
  json report{{"scenario", s.echo},      {"check", to_string(s.check)}, {"verdict", nullptr},
              {"estimated_modulus", nullptr}, {"witness", nullptr},       {"n_evaluated", 0},
              {"skipped_degenerate", 0}, {"skipped_cut_locus", 0},    {"seed", s.plan.seed},
              {"runtime_ms", 0.0},       {"version", kVersion},         {"details", json::object()}};
  json& details = report["details"];

  switch (s.check) {
    case CheckKind::Convexity:
      adopt(report, check_report_json(check_strong_gconvex(*s.function, s.order_m, s.c, s.plan)));
      break;
    case CheckKind::FirstOrder:
      adopt(report, check_report_json(check_first_order(*s.function, s.order_m, s.c, s.plan)));
      break;
    case CheckKind::Monotone:
      adopt(report, monotonicity_report_json(check_strong_monotone(*s.field, s.order_m, s.beta, s.plan)));
      break;
    case CheckKind::Pseudomonotone: {
      const json sub = monotonicity_report_json(check_pseudomonotone(*s.field, s.order_m, *s.beta, s.plan));
      adopt(report, sub);
      report["estimated_modulus"] = nullptr;
      details = {{"beta", *s.beta}, {"premise_count", sub["premise_count"]}, {"vacuous", sub["vacuous"]}};
      break;
    }
    case CheckKind::Thm31: {
      const Thm31Report r = thm31_harness(*s.function, s.order_m, s.plan);
      report["verdict"] = r.agree ? "PASS" : "FAIL";
      report["estimated_modulus"] = r.c_zeroth;
      report["n_evaluated"] = r.zeroth.n_evaluated + r.first.n_evaluated;
      report["skipped_degenerate"] = r.zeroth.skipped_degenerate + r.first.skipped_degenerate;
      report["skipped_cut_locus"] = r.zeroth.skipped_cut_locus + r.first.skipped_cut_locus;
      details = {{"c_zeroth", r.c_zeroth},
                 {"c_first", r.c_first},
                 {"agree", r.agree},
                 {"zeroth", check_report_json(r.zeroth)},
                 {"first", check_report_json(r.first)}};
      break;
    }
    case CheckKind::Thm32: {
      const Thm32Report r = thm32_harness(*s.function, s.order_m, s.plan);
      report["verdict"] = r.agree && r.forward_bound_ok ? "PASS" : "FAIL";
      report["estimated_modulus"] = r.beta;
      report["n_evaluated"] = r.zeroth.n_evaluated + r.monotone.n_evaluated;
      report["skipped_degenerate"] = r.zeroth.skipped_degenerate + r.monotone.skipped_degenerate;
      report["skipped_cut_locus"] = r.zeroth.skipped_cut_locus + r.monotone.skipped_cut_locus;
      details = {{"c_zeroth", r.c_zeroth},
                 {"beta", r.beta},
                 {"agree", r.agree},
                 {"forward_bound_ok", r.forward_bound_ok},
                 {"zeroth", check_report_json(r.zeroth)},
                 {"monotone", monotonicity_report_json(r.monotone)}};
      break;
    }
    case CheckKind::Vip: {
      s.problem->validate();
      const VipVerdict v = evaluate_candidate(*s.problem, *s.xbar, s.grid);
      report["verdict"] = v.is_vip_solution ? "PASS" : "FAIL";
      report["estimated_modulus"] = v.c_star;
      report["n_evaluated"] = s.grid.points.size();
      report["skipped_degenerate"] = v.skipped_degenerate;
      report["skipped_cut_locus"] = v.skipped_cut_locus;
      if (v.witness) {
        double worst = v.witness->pairings.front();
        for (double p : v.witness->pairings) worst = std::max(worst, p);
        report["witness"] = to_json(Witness{*s.xbar, v.witness->x, std::nullopt, worst, 0.0, worst});
      }
      details = {{"is_vip_solution", v.is_vip_solution},
                 {"is_strict_minimizer", v.is_strict_minimizer},
                 {"c_star", v.c_star},
                 {"c_star_index", v.c_star_index ? json(*v.c_star_index) : json(nullptr)},
                 {"pairings", v.witness ? json(v.witness->pairings) : json(nullptr)},
                 {"grid_index", v.witness ? json(v.witness->grid_index) : json(nullptr)}};
      break;
    }
    case CheckKind::Thm41: {
      s.problem->validate();
      const Thm41Report r = thm41_harness(*s.problem, s.grid, s.candidates);
      report["verdict"] = r.disagreements.empty() ? "PASS" : "FAIL";
      report["estimated_modulus"] = r.agreement_rate;
      report["n_evaluated"] = r.candidates.size() * s.grid.points.size();
      json cands = json::array();
      for (const auto& c : r.candidates) {
        cands.push_back({{"x", to_json(c.x)},
                         {"is_vip_solution", c.is_vip_solution},
                         {"is_strict_minimizer", c.is_strict_minimizer},
                         {"c_star", c.c_star},
                         {"boundary", c.boundary}});
      }
      details = {{"agreement_rate", r.agreement_rate},
                 {"disagreements", r.disagreements},
                 {"n_boundary", r.n_boundary},
                 {"resolution", r.resolution},
                 {"grid_size", s.grid.points.size()},
                 {"candidates", std::move(cands)}};
      break;
    }
  }
  report["runtime_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

RunOutcome run_scenario(const json& config, const Overrides& overrides) {
  RunOutcome out;
  std::optional<Scenario> s;
  try {
    s = parse_scenario(config, overrides);
  } catch (const ConfigError& e) {
    out.exit_code = kExitInvalidConfig;
    out.problems = e.problems();
    return out;
  }
  out.output = s->output;
  try {
    out.report = run_check(*s);
  } catch (const Error& e) {
    out.exit_code = e.is_numerical() ? kExitNumerical : kExitInvalidConfig;
    out.problems = {e.what()};
    return out;
  }
  out.exit_code = out.report["verdict"] == "PASS" ? kExitPass : kExitNegative;
  return out;
}

RunOutcome run_scenario_file(const std::filesystem::path& path, const Overrides& overrides) {
  std::ifstream in(path);
  if (!in) {
    RunOutcome out;
    out.exit_code = kExitInvalidConfig;
    out.problems = {"cannot read config file '" + path.string() + "'"};
    return out;
  }
  json config;
  try {
    config = json::parse(in);
  } catch (const json::parse_error& e) {
    RunOutcome out;
    out.exit_code = kExitInvalidConfig;
    out.problems = {"config is not valid JSON: " + std::string(e.what())};
    return out;
  }
  return run_scenario(config, overrides);
}

json strip_runtime(json report) {
  if (report.is_object()) {
    report.erase("runtime_ms");
    for (auto& [_, v] : report.items()) v = strip_runtime(v);
  } else if (report.is_array()) {
    for (auto& v : report) v = strip_runtime(v);
  }
  return report;
}

json catalog_listing() {
  json presets = json::array();
  for (const auto& p : catalog::function_presets()) {
    const Domain& d = p.function.domain();
    presets.push_back({{"name", p.name},
                       {"description", p.description},
                       {"manifold", to_string(d.manifold().kind())},
                       {"dim", d.manifold().dim()},
                       {"center", to_json(d.center())},
                       {"radius", d.radius()},
                       {"function", to_string(p.function.kind())}});
  }
  json checks = json::array();
  for (CheckKind k : {CheckKind::Convexity, CheckKind::FirstOrder, CheckKind::Monotone, CheckKind::Pseudomonotone,
                      CheckKind::Vip, CheckKind::Thm31, CheckKind::Thm32, CheckKind::Thm41}) {
    checks.push_back(to_string(k));
  }
  return json{{"manifolds", {"euclidean", "sphere", "poincare_ball"}},
              {"functions", {"quadratic", "linear", "dist_power", "cos_dist", "expression"}},
              {"fields", {"gradient_of", "linear", "rotation", "expression"}},
              {"checks", checks},
              {"presets", presets}};
}

std::string report_csv(const json& report) {
  std::ostringstream os;
  os << "scenario,check,verdict,estimated_modulus,witness_gap,n_evaluated,skipped_degenerate,skipped_cut_locus,seed,"
        "runtime_ms,version\n";
  const json& sc = report["scenario"];
  const std::string name = sc.contains("name") ? sc["name"].get<std::string>() : "";
  os << name << ',' << report["check"].get<std::string>() << ',' << report["verdict"].get<std::string>() << ','
     << (report["estimated_modulus"].is_null() ? "" : report["estimated_modulus"].dump()) << ','
     << (report["witness"].is_null() ? "" : report["witness"]["gap"].dump()) << ',' << report["n_evaluated"] << ','
     << report["skipped_degenerate"] << ',' << report["skipped_cut_locus"] << ',' << report["seed"] << ','
     << report["runtime_ms"].dump() << ',' << report["version"].get<std::string>() << '\n';
  return os.str();
}

}  // namespace sgc
