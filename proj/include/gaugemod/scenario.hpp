#ifndef GAUGEMOD_SCENARIO_HPP
#define GAUGEMOD_SCENARIO_HPP

#include "circle.hpp"
#include "derham.hpp"
#include "gauge.hpp"
#include "glrep.hpp"
#include "groebner.hpp"
#include "sampling.hpp"
#include "variety.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace gaugemod::scenario {

using json = nlohmann::json;

/// Malformed or inconsistent scenario input (exit code 2).
class ScenarioError : public Error {
public:
  using Error::Error;
};

enum class Status { Pass, Fail, Computed };

inline std::string status_name(Status s) {
  switch (s) {
  case Status::Pass: return "pass";
  case Status::Fail: return "fail";
  default: return "computed";
  }
}

struct CheckRecord {
  std::string name;
  Status status = Status::Pass;
  std::string summary;
  json detail = json::object();
  double millis = 0;
};

struct Report {
  std::string scenario;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;

  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == s;
    return n;
  }
  int exit_code() const { return count(Status::Fail) ? 1 : 0; }

  json to_json(bool timing = false) const {
    json j;
    j["schema"] = "1";
    j["scenario"] = scenario;
    j["seed"] = seed;
    json list = json::array();
    for (const auto& c : checks) {
      json r{{"name", c.name}, {"status", status_name(c.status)}, {"summary", c.summary}, {"detail", c.detail}};
      if (timing) r["millis"] = c.millis;
      list.push_back(std::move(r));
    }
    j["checks"] = std::move(list);
    j["summary"] = {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)}, {"computed", count(Status::Computed)}};
    return j;
  }

  std::string to_text(bool timing = false) const {
    std::ostringstream out;
    out << "scenario " << scenario << " (seed " << seed << ")\n";
    for (const auto& c : checks) {
      std::string tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "COMPUTED";
      out << tag << "  " << c.name;
      if (!c.summary.empty()) out << ": " << c.summary;
      if (timing) out << "  [" << c.millis << " ms]";
      out << "\n";
    }
    out << count(Status::Pass) << " pass, " << count(Status::Fail) << " fail, " << count(Status::Computed)
        << " computed\n";
    return out.str();
  }
};

struct Options {
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::optional<int> max_degree;
};

struct Scenario {
  std::string name = "unnamed";
  std::uint64_t seed = 1;
  int samples = 100;
  int max_degree = 4;   ///< degree bound D for the obstruction search
  int degree_cap = 64;  ///< polynomial degree cap
  std::optional<json> variety, module, field, circle, obstruction;
  std::optional<std::string> chart;
  std::optional<int> casimir_rank;
  std::vector<std::string> checks;
};

namespace detail {

inline const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ScenarioError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

inline std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ScenarioError(where + ": expected a string");
  return j.get<std::string>();
}

inline long as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ScenarioError(where + ": expected an integer");
  return j.get<long>();
}

inline Rational as_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      throw ScenarioError(where + ": " + e.what());
    }
  }
  throw ScenarioError(where + ": expected an integer or a rational string");
}

inline std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ScenarioError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(as_string(e, where));
  return out;
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

} // namespace detail

inline Scenario parse_scenario(const json& j) {
  using namespace detail;
  if (!j.is_object()) throw ScenarioError("scenario must be a JSON object");
  static const std::set<std::string> known = {"name",   "seed",  "samples", "maxDegree", "degreeCap",   "variety", "chart",
                                              "module", "B",     "checks",  "circle",    "obstruction", "casimir"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) throw ScenarioError("unknown scenario key \"" + k + "\"");
  Scenario s;
  if (j.contains("name")) s.name = as_string(j["name"], "name");
  if (j.contains("seed")) {
    long v = as_int(j["seed"], "seed");
    if (v < 0) throw ScenarioError("seed must be non-negative");
    s.seed = static_cast<std::uint64_t>(v);
  }
  if (j.contains("samples")) s.samples = static_cast<int>(as_int(j["samples"], "samples"));
  if (j.contains("maxDegree")) s.max_degree = static_cast<int>(as_int(j["maxDegree"], "maxDegree"));
  if (j.contains("degreeCap")) s.degree_cap = static_cast<int>(as_int(j["degreeCap"], "degreeCap"));
  if (s.samples < 0 || s.max_degree < 0 || s.degree_cap < 1) throw ScenarioError("negative count or bound");
  if (j.contains("variety")) s.variety = j["variety"];
  if (j.contains("chart")) s.chart = as_string(j["chart"], "chart");
  if (j.contains("module")) s.module = j["module"];
  if (j.contains("B")) s.field = j["B"];
  if (j.contains("circle")) s.circle = j["circle"];
  if (j.contains("obstruction")) s.obstruction = j["obstruction"];
  if (j.contains("casimir")) s.casimir_rank = static_cast<int>(as_int(require(j["casimir"], "N", "casimir"), "casimir.N"));
  if (j.contains("checks")) s.checks = string_list(j["checks"], "checks");
  return s;
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ScenarioError(path + ": " + e.what());
  }
  return parse_scenario(j);
}

inline GlModule build_module(const json& j) {
  using namespace detail;
  const std::size_t n = static_cast<std::size_t>(as_int(require(j, "N", "module"), "module.N"));
  const std::string kind = as_string(require(j, "kind", "module"), "module.kind");
  try {
    if (kind == "exterior") {
      long k = as_int(require(j, "k", "module"), "module.k");
      if (k < 0) throw ScenarioError("module.k must be non-negative");
      return exterior_power(n, static_cast<std::size_t>(k));
    }
    if (kind == "trivial") {
      long dim = j.contains("dim") ? as_int(j["dim"], "module.dim") : 1;
      if (dim < 1) throw ScenarioError("module.dim must be positive");
      return trivial_module(n, static_cast<std::size_t>(dim));
    }
    if (kind == "custom") {
      const json& ms = require(j, "matrices", "module");
      if (!ms.is_array()) throw ScenarioError("module.matrices: expected an array of matrices");
      std::vector<Matrix> mats;
      for (const auto& m : ms) {
        if (!m.is_array()) throw ScenarioError("module.matrices: expected a matrix (array of rows)");
        std::vector<std::vector<Rational>> rows;
        for (const auto& r : m) {
          if (!r.is_array() || r.size() != m.size()) throw ScenarioError("module.matrices: matrices must be square");
          std::vector<Rational> row;
          for (const auto& e : r) row.push_back(as_rational(e, "module.matrices"));
          rows.push_back(std::move(row));
        }
        mats.push_back(Matrix::from_rows(rows));
      }
      return custom_module(n, std::move(mats));
    }
  } catch (const ScenarioError&) {
    throw;
  } catch (const BudgetError&) {
    throw;
  } catch (const Error& e) {
    throw ScenarioError(std::string("module: ") + e.what());
  }
  throw ScenarioError("module.kind must be exterior, trivial or custom");
}

/// The objects a scenario refers to, built and cross-checked before any check runs.
struct Context {
  Scenario scenario;
  std::optional<Variety> variety;
  std::shared_ptr<const TangentFrame> frame;
  std::optional<GlModule> module;
  std::optional<GaugeField> field;
  std::vector<LocalizedElement> scalar_field;  ///< set when every B_i is a scalar
  bool field_is_scalar = false;
  std::vector<Rational> alphas;
  int grid = 2;
  int basis_depth = 3;
  bool obstruction_gaussian = true;
  std::optional<std::string> obstruction_expect;
  std::size_t obstruction_rank = 1;
};

namespace detail {

inline LocalizedElement field_entry(const json& e, const TangentFrame& f, const std::string& where) {
  const auto& ctx = f.localization();
  try {
    if (e.is_string()) return LocalizedElement(ctx, parse_poly(e.get<std::string>(), ctx->ring()));
    if (e.is_number_integer()) return LocalizedElement::constant(ctx, Rational(e.get<long>()));
    if (e.is_object()) {
      auto num = parse_poly(as_string(require(e, "num", where), where), ctx->ring());
      long hp = e.contains("hpower") ? as_int(e["hpower"], where + ".hpower") : 0;
      if (hp < 0) throw ScenarioError(where + ": hpower must be non-negative");
      return LocalizedElement(ctx, num, static_cast<int>(hp));
    }
  } catch (const ParseError& p) {
    throw ScenarioError(where + ": " + p.what());
  }
  throw ScenarioError(where + ": expected an expression string or {\"num\", \"hpower\"}");
}

} // namespace detail

inline Context build_context(Scenario s, const Options& opt = {}) {
  using namespace detail;
  if (opt.seed) s.seed = *opt.seed;
  if (opt.samples) s.samples = *opt.samples;
  if (opt.max_degree) s.max_degree = *opt.max_degree;
  Context cx;

  if (s.variety) {
    const json& v = *s.variety;
    auto vars = string_list(require(v, "variables", "variety"), "variety.variables");
    auto gens = v.contains("generators") ? string_list(v["generators"], "variety.generators") : std::vector<std::string>{};
    MonomialOrder ord = MonomialOrder::grevlex();
    if (v.contains("order")) {
      auto o = as_string(v["order"], "variety.order");
      if (o == "lex") ord = MonomialOrder::lex();
      else if (o != "grevlex") throw ScenarioError("variety.order must be grevlex or lex");
    }
    try {
      auto ring = make_ring(vars, s.degree_cap);
      std::vector<Polynomial> polys;
      for (const auto& g : gens) polys.push_back(parse_poly(g, ring));
      cx.variety.emplace(ring, std::move(polys), ord);
    } catch (const ParseError& e) {
      throw ScenarioError(std::string("variety: ") + e.what());
    } catch (const BudgetError&) {
      throw;
    } catch (const Error& e) {
      throw ScenarioError(std::string("variety: ") + e.what());
    }
    if (s.chart) {
      try {
        cx.frame = std::make_shared<const TangentFrame>(*cx.variety, cx.variety->chart(*s.chart));
      } catch (const BudgetError&) {
        throw;
      } catch (const Error& e) {
        throw ScenarioError(std::string("chart: ") + e.what());
      }
    }
  }

  if (s.module) cx.module = build_module(*s.module);

  if (cx.frame) {
    const std::size_t n = cx.frame->dimension();
    const std::size_t dim = cx.module ? cx.module->dim() : 1;
    if (cx.module && cx.module->rank() != n)
      throw ScenarioError("module rank " + std::to_string(cx.module->rank()) + " does not match chart dimension " +
                          std::to_string(n));
    if (!s.field) {
      cx.field = GaugeField::zero(cx.frame->localization(), n, dim);
      cx.scalar_field.assign(n, LocalizedElement::zero(cx.frame->localization()));
      cx.field_is_scalar = true;
    } else {
      const json& b = *s.field;
      if (!b.is_array() || b.size() != n)
        throw ScenarioError("B: expected " + std::to_string(n) + " entries, one per chart parameter");
      GaugeField gf;
      cx.field_is_scalar = true;
      for (std::size_t i = 0; i < n; ++i) {
        std::string where = "B[" + std::to_string(i) + "]";
        if (b[i].is_array()) {
          if (b[i].size() != dim) throw ScenarioError(where + ": matrix size does not match dim U");
          LocMatrix m(cx.frame->localization(), dim);
          for (std::size_t r = 0; r < dim; ++r) {
            if (!b[i][r].is_array() || b[i][r].size() != dim) throw ScenarioError(where + ": matrix must be square");
            for (std::size_t c = 0; c < dim; ++c) m(r, c) = field_entry(b[i][r][c], *cx.frame, where);
          }
          gf.B.push_back(std::move(m));
          cx.field_is_scalar = false;
        } else {
          auto e = field_entry(b[i], *cx.frame, where);
          gf.B.push_back(LocMatrix::scalar(e, dim));
          cx.scalar_field.push_back(e);
        }
      }
      if (!cx.field_is_scalar) cx.scalar_field.clear();
      cx.field = std::move(gf);
    }
  }

  if (s.circle) {
    const json& c = *s.circle;
    if (!c.is_object()) throw ScenarioError("circle: expected an object");
    const json& a = require(c, "alpha", "circle");
    if (a.is_array())
      for (const auto& e : a) cx.alphas.push_back(as_rational(e, "circle.alpha"));
    else
      cx.alphas.push_back(as_rational(a, "circle.alpha"));
    if (cx.alphas.empty()) throw ScenarioError("circle.alpha: need at least one value");
    if (c.contains("grid")) cx.grid = static_cast<int>(as_int(c["grid"], "circle.grid"));
    if (c.contains("basisDepth")) cx.basis_depth = static_cast<int>(as_int(c["basisDepth"], "circle.basisDepth"));
    if (cx.grid < 0 || cx.grid > 6) throw ScenarioError("circle.grid must lie in [0, 6]");
    if (cx.basis_depth < 0 || cx.basis_depth > 12) throw ScenarioError("circle.basisDepth must lie in [0, 12]");
  }

  if (s.obstruction) {
    const json& o = *s.obstruction;
    long n = as_int(require(o, "N", "obstruction"), "obstruction.N");
    if (n < 1) throw ScenarioError("obstruction.N must be at least 1");
    cx.obstruction_rank = static_cast<std::size_t>(n);
    if (o.contains("field")) {
      auto f = as_string(o["field"], "obstruction.field");
      if (f == "zero") cx.obstruction_gaussian = false;
      else if (f != "gaussian") throw ScenarioError("obstruction.field must be gaussian or zero");
    }
    if (o.contains("expect")) {
      auto e = as_string(o["expect"], "obstruction.expect");
      if (e != "FEASIBLE" && e != "INFEASIBLE") throw ScenarioError("obstruction.expect must be FEASIBLE or INFEASIBLE");
      cx.obstruction_expect = e;
    }
  }

  if (s.casimir_rank && (*s.casimir_rank < 1 || *s.casimir_rank > 4)) throw ScenarioError("casimir.N must lie in [1, 4]");
  cx.scenario = std::move(s);
  return cx;
}

/// Central characters and P_j values of Lambda^k Q^N for k = 0..N.
inline json casimir_table(std::size_t n, std::uint64_t budget = default_term_budget) {
  json rows = json::array();
  for (std::size_t k = 0; k <= n; ++k) {
    auto m = exterior_power(n, k);
    auto chi = central_character(m);
    json omega = json::array(), p = json::array();
    for (const auto& c : chi) omega.push_back(to_string(c));
    for (std::size_t j = 2; j <= n; ++j) {
      auto v = p_poly_matrix(j, m, budget).scalar_value();
      p.push_back(v ? to_string(*v) : std::string("non-scalar"));
    }
    rows.push_back({{"k", k}, {"omega", omega}, {"P", p}});
  }
  return rows;
}

/// Rows "Omega_j: ..." and "P_j: ..." with one column per exterior power.
inline std::string render_casimir_table(const json& rows) {
  std::ostringstream out;
  const std::size_t n = rows.size() - 1;
  out << "        ";
  for (const auto& r : rows) out << " L^" << r["k"].get<std::size_t>();
  out << "\n";
  for (std::size_t j = 0; j < n; ++j) {
    out << "Omega_" << j + 1 << ":";
    for (const auto& r : rows) out << " " << std::setw(3) << r["omega"][j].get<std::string>();
    out << "\n";
  }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    out << "P_" << j + 2 << ":    ";
    for (const auto& r : rows) out << " " << std::setw(3) << r["P"][j].get<std::string>();
    out << "\n";
  }
  return out.str();
}

namespace detail {

struct Outcome {
  Status status = Status::Pass;
  std::string summary;
  json detail = json::object();
};

inline Outcome verdict(bool ok, std::string summary, json detail = json::object()) {
  return {ok ? Status::Pass : Status::Fail, std::move(summary), std::move(detail)};
}

inline void need(bool ok, const std::string& check, const char* what) {
  if (!ok) throw ScenarioError("check " + check + " needs " + what);
}

inline std::vector<LocalizedElement> random_chart_field(Sampler& rng, const TangentFrame& f) {
  std::vector<LocalizedElement> eta;
  for (std::size_t i = 0; i < f.dimension(); ++i) eta.push_back(rng.localized(f.localization(), 2, 1));
  return eta;
}

inline GaugeElement random_gauge_element(Sampler& rng, const LocalizationPtr& ctx, std::size_t dim) {
  GaugeElement x(ctx);
  for (std::size_t i = 0; i < dim; ++i) x.add(i, rng.localized(ctx, 2, 1));
  return x;
}

inline FormElement random_form(Sampler& rng, const LocalizationPtr& ctx, std::size_t n, std::size_t k) {
  FormElement x(ctx, k);
  for (const auto& s : wedge_basis(n, k))
    if (rng.coin(70)) x.add(s, rng.localized(ctx, 2, 1));
  return x;
}

using CheckFn = std::function<Outcome(const Context&, Sampler&)>;

struct CheckSpec {
  const char* needs;  ///< short description of required scenario sections
  std::function<bool(const Context&)> ready;
  CheckFn run;
};

inline bool has_variety(const Context& c) { return c.variety.has_value(); }
inline bool has_gauge(const Context& c) { return c.frame && c.module && c.field; }
inline bool has_scalar_gauge(const Context& c) { return c.frame && c.field_is_scalar; }
inline bool has_module(const Context& c) { return c.module.has_value(); }
inline bool has_circle(const Context& c) { return !c.alphas.empty(); }

inline GaugeAction gauge_action(const Context& c) { return GaugeAction(c.frame, *c.module, *c.field); }

inline const std::map<std::string, CheckSpec>& catalog() {
  static const std::map<std::string, CheckSpec> checks = {
      {"groebner.basis",
       {"variety", has_variety,
        [](const Context& c, Sampler&) {
          json d = json::object();
          bool ok = true;
          for (auto [name, ord] : {std::pair{"grevlex", MonomialOrder::grevlex()}, std::pair{"lex", MonomialOrder::lex()}}) {
            auto gb = buchberger(Ideal(c.variety->ring(), c.variety->generators()), ord);
            bool s_ok = s_pairs_reduce_to_zero(gb);
            bool members = true;
            for (const auto& g : c.variety->generators()) members = members && normal_form(g, gb).is_zero();
            ok = ok && s_ok && members;
            json b = json::array();
            for (const auto& p : gb.basis) b.push_back(render(p, ord));
            d[name] = {{"basis", b}, {"s_pairs_reduce", s_ok}, {"generators_reduce", members}};
          }
          return verdict(ok, ok ? "S-pairs reduce to zero under grevlex and lex" : "a basis failed self-verification", d);
        }}},
      {"variety.rank",
       {"variety", has_variety,
        [](const Context& c, Sampler&) {
          const auto& v = *c.variety;
          json jac = json::array();
          for (const auto& row : v.jacobian()) {
            json r = json::array();
            for (const auto& e : row) r.push_back(v.algebra().render(e));
            jac.push_back(r);
          }
          return Outcome{Status::Computed,
                         "rank " + std::to_string(v.jacobian_rank()) + ", dimension " + std::to_string(v.dimension()),
                         {{"jacobian", jac}, {"rank", v.jacobian_rank()}, {"dimension", v.dimension()}}};
        }}},
      {"variety.charts",
       {"variety", has_variety,
        [](const Context& c, Sampler&) {
          const auto& v = *c.variety;
          json list = json::array();
          std::string names;
          for (const auto& ch : v.charts()) {
            json params = json::array();
            for (auto p : ch.parameters) params.push_back(v.ring()->variables[p]);
            list.push_back({{"name", ch.name}, {"h", v.algebra().render(ch.h)}, {"parameters", params}});
            names += (names.empty() ? "" : ", ") + ch.name;
          }
          return Outcome{Status::Computed, std::to_string(v.charts().size()) + " charts: " + names, {{"charts", list}}};
        }}},
      {"variety.smooth",
       {"variety", has_variety,
        [](const Context& c, Sampler&) {
          bool ok = c.variety->smoothness_certificate();
          return verdict(ok, ok ? "ideal plus minors is the unit ideal" : "minors do not generate the unit ideal mod I");
        }}},
      {"variety.frames",
       {"variety", has_variety,
        [](const Context& c, Sampler&) {
          const auto& v = *c.variety;
          json d = json::object();
          bool ok = true;
          for (const auto& ch : v.charts()) {
            TangentFrame f(v, ch);
            bool good = f.verify(v);
            ok = ok && good;
            json corr = json::array();
            for (std::size_t i = 0; i < f.dimension(); ++i) {
              json row = json::array();
              for (std::size_t j = 0; j < ch.beta.size(); ++j) row.push_back(f.correction(i, j).render());
              corr.push_back(row);
            }
            d[ch.name] = {{"verified", good}, {"corrections", corr}};
          }
          return verdict(ok, ok ? "every chart frame annihilates the generators" : "a chart frame failed", d);
        }}},
      {"gauge.axioms",
       {"variety, chart and module", has_gauge,
        [](const Context& c, Sampler&) {
          auto rep = gauge_action(c).validate();
          json d{{"linearity", rep.linearity}, {"equivariance", rep.equivariance}, {"flatness", rep.flatness}};
          if (!rep.ok()) d["witness"] = rep.witness;
          return verdict(rep.ok(), rep.ok() ? "all gauge-field axioms hold" : rep.witness, d);
        }}},
      {"gauge.lie_action",
       {"variety, chart and module", has_gauge,
        [](const Context& c, Sampler& rng) {
          auto act = gauge_action(c);
          for (int t = 0; t < c.scenario.samples; ++t) {
            auto eta = random_chart_field(rng, *c.frame), mu = random_chart_field(rng, *c.frame);
            auto x = random_gauge_element(rng, c.frame->localization(), c.module->dim());
            auto r = check_lie_action(act, eta, mu, x);
            if (!r.pass) return verdict(false, "sample " + std::to_string(t) + ": " + r.witness, {{"sample", t}});
          }
          return verdict(true, std::to_string(c.scenario.samples) + " samples", {{"samples", c.scenario.samples}});
        }}},
      {"gauge.av_compat",
       {"variety, chart and module", has_gauge,
        [](const Context& c, Sampler& rng) {
          auto act = gauge_action(c);
          for (int t = 0; t < c.scenario.samples; ++t) {
            auto eta = random_chart_field(rng, *c.frame);
            auto f = rng.localized(c.frame->localization(), 2, 1);
            auto x = random_gauge_element(rng, c.frame->localization(), c.module->dim());
            auto r = check_av_compat(act, eta, f, x);
            if (!r.pass) return verdict(false, "sample " + std::to_string(t) + ": " + r.witness, {{"sample", t}});
          }
          return verdict(true, std::to_string(c.scenario.samples) + " samples", {{"samples", c.scenario.samples}});
        }}},
      {"gauge.twist",
       {"variety, chart and module", has_gauge,
        [](const Context& c, Sampler& rng) {
          auto act = gauge_action(c);
          auto g = rng.localized(c.frame->localization(), 3, 1);
          std::vector<LocalizedElement> omega, minus;
          for (std::size_t i = 0; i < c.frame->dimension(); ++i) {
            omega.push_back(c.frame->partial(g, i));
            minus.push_back(-omega.back());
          }
          auto tw = act.twist(omega);
          auto back = tw.twist(minus);
          const int n = std::max(1, c.scenario.samples / 10);
          for (int t = 0; t < n; ++t) {
            auto eta = random_chart_field(rng, *c.frame), mu = random_chart_field(rng, *c.frame);
            auto x = random_gauge_element(rng, c.frame->localization(), c.module->dim());
            if (back.act(eta, x) != act.act(eta, x))
              return verdict(false, "twisting by dG then -dG changed the action", {{"G", g.render()}, {"sample", t}});
            auto r = check_lie_action(tw, eta, mu, x);
            if (!r.pass) return verdict(false, "twisted action: " + r.witness, {{"G", g.render()}, {"sample", t}});
          }
          return verdict(true, "dG twist is a module structure and -dG undoes it", {{"G", g.render()}, {"samples", n}});
        }}},
      {"derham.complex",
       {"variety, chart and scalar B", has_scalar_gauge,
        [](const Context& c, Sampler& rng) {
          DeRhamComplex cx(c.frame, c.scalar_field);
          const std::size_t n = cx.dimension();
          if (n < 2) return verdict(true, "vacuous: d_1 d_0 needs N >= 2", {{"samples", 0}});
          for (int t = 0; t < c.scenario.samples; ++t) {
            auto k = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 2));
            auto r = check_complex(cx, random_form(rng, c.frame->localization(), n, k));
            if (!r.pass) return verdict(false, "degree " + std::to_string(k) + ": " + r.witness, {{"sample", t}});
          }
          return verdict(true, std::to_string(c.scenario.samples) + " samples", {{"samples", c.scenario.samples}});
        }}},
      {"derham.morphism",
       {"variety, chart and scalar B", has_scalar_gauge,
        [](const Context& c, Sampler& rng) {
          DeRhamComplex cx(c.frame, c.scalar_field);
          const std::size_t n = cx.dimension();
          if (n < 1) return verdict(true, "vacuous: no chart parameters", {{"samples", 0}});
          for (int t = 0; t < c.scenario.samples; ++t) {
            auto k = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1));
            auto x = random_form(rng, c.frame->localization(), n, k);
            auto r = check_morphism(cx, random_chart_field(rng, *c.frame), x);
            if (!r.pass) return verdict(false, "degree " + std::to_string(k) + ": " + r.witness, {{"sample", t}});
          }
          return verdict(true, std::to_string(c.scenario.samples) + " samples", {{"samples", c.scenario.samples}});
        }}},
      {"derham.kernel",
       {"variety and chart", [](const Context& c) { return c.frame != nullptr; },
        [](const Context& c, Sampler&) {
          // with B = 0: d(1⊗e_1..e_k) = 0 and d(t_1⊗e_2..e_{k+1}) = 1⊗e_1..e_{k+1}
          const std::size_t n = c.frame->dimension();
          const auto& ctx = c.frame->localization();
          DeRhamComplex cx(c.frame, std::vector<LocalizedElement>(n, LocalizedElement::zero(ctx)));
          for (std::size_t k = 0; k < n; ++k) {
            WedgeIndex first(k), shifted(k), full(k + 1);
            for (std::size_t i = 0; i < k; ++i) first[i] = i, shifted[i] = i + 1;
            for (std::size_t i = 0; i <= k; ++i) full[i] = i;
            auto d1 = cx.d(FormElement::single(LocalizedElement::one(ctx), first));
            if (!d1.is_zero()) return verdict(false, "d_" + std::to_string(k) + "(1⊗e_1..e_k) = " + d1.render());
            auto d2 = cx.d(FormElement::single(c.frame->parameter(0), shifted));
            if (d2 != FormElement::single(LocalizedElement::one(ctx), full))
              return verdict(false, "d_" + std::to_string(k) + "(t_1⊗e_2..e_{k+1}) = " + d2.render());
          }
          return verdict(true, "both evaluations hold for k < " + std::to_string(n), {{"degrees", n}});
        }}},
      {"derham.not_a_morphism",
       {"variety, chart and scalar B", has_scalar_gauge,
        [](const Context& c, Sampler&) {
          DeRhamComplex cx(c.frame, c.scalar_field);
          auto w = witness_not_a_morphism(cx);
          return verdict(true, "d(f·x) = " + w.d_of_fx.render() + " but f·d(x) = " + w.f_times_dx.render(),
                         {{"f", w.f.render()}, {"x", w.x.render()}});
        }}},
      {"derham.obstruction",
       {"obstruction", [](const Context& c) { return c.scenario.obstruction.has_value(); },
        [](const Context& c, Sampler&) {
          const int d = c.scenario.max_degree;
          ObstructionVerdict v;
          if (c.obstruction_gaussian) {
            v = gaussian_obstruction(c.obstruction_rank, d);
          } else {
            std::vector<std::string> vars;
            for (std::size_t i = 1; i <= c.obstruction_rank; ++i) vars.push_back("x" + std::to_string(i));
            auto ring = make_ring(vars);
            v = gaussian_obstruction(ring, std::vector<Polynomial>(c.obstruction_rank, Polynomial(ring)), d);
          }
          json det{{"verdict", v.label(d)}, {"unknowns", v.unknowns}, {"equations", v.equations}};
          if (v.feasible) {
            json sol = json::array();
            for (const auto& f : v.solution) sol.push_back(render(f));
            det["solution"] = sol;
          }
          std::string summary = v.label(d) + " (" + std::to_string(v.unknowns) + " unknowns)";
          if (!c.obstruction_expect) return Outcome{Status::Computed, summary, det};
          bool want = *c.obstruction_expect == "FEASIBLE";
          return verdict(v.feasible == want, summary, det);
        }}},
      {"glrep.central_character",
       {"module", has_module,
        [](const Context& c, Sampler&) {
          try {
            auto chi = central_character(*c.module);
            json d = json::array();
            std::string s;
            for (const auto& x : chi) {
              d.push_back(to_string(x));
              s += (s.empty() ? "" : ", ") + to_string(x);
            }
            return Outcome{Status::Computed, "(" + s + ")", {{"omega", d}}};
          } catch (const BudgetError&) {
            throw;
          } catch (const Error& e) {
            return verdict(false, e.what());
          }
        }}},
      {"glrep.exceptional",
       {"module", has_module,
        [](const Context& c, Sampler&) {
          auto rep = exceptional_check(*c.module);
          json p = json::array();
          for (const auto& s : rep.p_scalars) p.push_back(s ? to_string(*s) : std::string("non-scalar"));
          return Outcome{Status::Computed, rep.possibly_exceptional ? "possibly exceptional" : "not exceptional",
                         {{"omega1", to_string(rep.omega1)},
                          {"omega1_in_range", rep.omega1_in_range},
                          {"P", p},
                          {"possibly_exceptional", rep.possibly_exceptional}}};
        }}},
      {"glrep.centrality",
       {"module", has_module,
        [](const Context& c, Sampler&) {
          const auto& m = *c.module;
          const std::size_t n = m.rank(), top = n <= 2 ? 4 : 3;
          for (std::size_t k = 2; k <= top; ++k) {
            auto ev = evaluate(hat_omega(k, n), m);
            for (std::size_t a = 0; a < n; ++a)
              for (std::size_t b = 0; b < n; ++b)
                if (!commutator(ev, m.rho(a, b)).is_zero())
                  return verdict(false, "hat_omega_" + std::to_string(k) + " does not commute with E_" +
                                            std::to_string(a + 1) + std::to_string(b + 1));
          }
          return verdict(true, "hat_omega_k central for k <= " + std::to_string(top), {{"max_k", top}});
        }}},
      {"glrep.stabilizer",
       {"module", has_module,
        [](const Context& c, Sampler&) {
          const std::size_t n = c.module->rank();
          json d = json::array();
          for (std::size_t k = 1; k <= 4; ++k) {
            auto got = stabilizer_sum(n, k);
            auto want = factorial(n + k - 1) / factorial(n - 1);
            d.push_back({{"k", k}, {"sum", got}, {"formula", want}});
            if (got != want) return verdict(false, "k = " + std::to_string(k) + ": " + std::to_string(got), d);
          }
          return verdict(true, "brute force matches (N+k-1)!/(N-1)! for k <= 4", d);
        }}},
      {"casimir.table",
       {"casimir.N", [](const Context& c) { return c.scenario.casimir_rank.has_value(); },
        [](const Context& c, Sampler&) {
          const auto n = static_cast<std::size_t>(*c.scenario.casimir_rank);
          auto rows = casimir_table(n);
          bool ok = true;
          for (const auto& r : rows) {
            ok = ok && r["omega"][0] == std::to_string(r["k"].get<std::size_t>());
            for (const auto& p : r["P"]) ok = ok && p == "0";
          }
          return verdict(ok, ok ? "Omega_1 = k and every P_j vanishes" : "table disagrees with the exterior powers",
                         {{"rows", rows}, {"text", render_casimir_table(rows)}});
        }}},
      {"circle.witt",
       {"circle", has_circle,
        [](const Context& c, Sampler&) {
          using namespace gaugemod::circle;
          std::size_t count = 0;
          for (const auto& a : c.alphas)
            for (int n = -c.grid; n <= c.grid; ++n)
              for (int m = -c.grid; m <= c.grid; ++m)
                for (int k = -2; k <= 2; ++k)
                  for (auto sym : {Symbol::V, Symbol::U}) {
                    auto r = witt_bracket_check(n, m, CircleElement::basis(a, sym, k));
                    if (!r.pass) return verdict(false, r.witness);
                    ++count;
                  }
          return verdict(true, std::to_string(count) + " brackets", {{"cases", count}});
        }}},
      {"circle.casimir",
       {"circle", has_circle,
        [](const Context& c, Sampler& rng) {
          using namespace gaugemod::circle;
          json d = json::object();
          for (const auto& a : c.alphas) {
            auto r = casimir_scalar_check(a, casimir_samples(a, rng.integer(0, 1L << 30)));
            if (!r.pass) return verdict(false, r.witness);
            d[to_string(a)] = to_string(a * (a - 1));
          }
          return verdict(true, "C acts by alpha(alpha-1)", {{"gamma", d}});
        }}},
      {"circle.s",
       {"circle", has_circle,
        [](const Context&, Sampler&) {
          using namespace gaugemod::circle;
          auto r = apply_word(s_word(), CircleElement::basis(0, Symbol::V, 0));
          return verdict(r.is_zero(), "s v_0 = " + r.render() + " at alpha = 0");
        }}},
      {"circle.q",
       {"circle", has_circle,
        [](const Context& c, Sampler&) {
          using namespace gaugemod::circle;
          for (const auto& a : c.alphas) {
            auto r = apply_word(q_word(a), CircleElement::basis(a, Symbol::V, 0));
            if (!r.is_zero()) return verdict(false, "alpha = " + to_string(a) + ": q v_0 = " + r.render());
          }
          return verdict(true, "q v_0 = 0 for every alpha");
        }}},
      {"circle.p",
       {"circle", has_circle,
        [](const Context& c, Sampler&) {
          using namespace gaugemod::circle;
          json d = json::object();
          std::string s;
          for (const auto& a : c.alphas) {
            auto r = apply_word(p_word(a), CircleElement::basis(a, Symbol::V, 0));
            d[to_string(a)] = r.render();
            s += (s.empty() ? "" : "; ") + ("alpha = " + to_string(a) + ": " + r.render());
          }
          return Outcome{Status::Computed, "p v_0: " + s, {{"p_v0", d}, {"word", "e_1 - e_0 e_0 (e_0 + 1 - alpha)"}}};
        }}},
      {"circle.basis",
       {"circle", has_circle,
        [](const Context& c, Sampler&) {
          using namespace gaugemod::circle;
          auto rep = basis_leading_terms(c.basis_depth);
          json ext = json::array();
          for (const auto& k : rep.extremes) ext.push_back(render_key(k));
          bool ok = rep.extremes_ok && rep.independent;
          return verdict(ok, std::to_string(rep.vectors.size()) + " vectors, rank " + std::to_string(rep.rank),
                         {{"extremes", ext}, {"rank", rep.rank}, {"independent", rep.independent}});
        }}},
      {"circle.crosscheck",
       {"circle", has_circle,
        [](const Context& c, Sampler&) {
          using namespace gaugemod::circle;
          const int g = std::min(c.grid, 2);
          std::size_t count = 0;
          for (const auto& a : c.alphas) {
            CircleGauge gauge(a);
            for (int n = -g; n <= g; ++n)
              for (int k = -g; k <= g; ++k)
                for (auto sym : {Symbol::V, Symbol::U}) {
                  auto r = gauge.crosscheck(n, k, sym);
                  if (!r.pass) return verdict(false, r.witness);
                  ++count;
                }
          }
          return verdict(true, std::to_string(count) + " cases agree with the gauge construction", {{"cases", count}});
        }}},
  };
  return checks;
}

} // namespace detail

inline std::vector<std::string> known_checks() {
  std::vector<std::string> out;
  for (const auto& [name, spec] : detail::catalog()) out.push_back(name);
  return out;
}

/// Names of all catalog checks starting with prefix.
inline std::vector<std::string> checks_with_prefix(const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& name : known_checks())
    if (name.rfind(prefix, 0) == 0) out.push_back(name);
  return out;
}

/// Validates, then runs every requested check. BudgetError propagates (exit code 3).
inline Report run(const Context& cx) {
  const auto& cat = detail::catalog();
  std::set<std::string> names;
  for (const auto& name : cx.scenario.checks) {
    auto it = cat.find(name);
    if (it == cat.end()) {
      std::string known;
      for (const auto& k : known_checks()) known += (known.empty() ? "" : ", ") + k;
      throw ScenarioError("unknown check \"" + name + "\"; known checks: " + known);
    }
    if (!names.insert(name).second) throw ScenarioError("check \"" + name + "\" listed twice");
    detail::need(it->second.ready(cx), name, it->second.needs);
  }
  Report rep;
  rep.scenario = cx.scenario.name;
  rep.seed = cx.scenario.seed;
  for (const auto& name : names) {
    Sampler rng(cx.scenario.seed ^ detail::fnv1a(name));
    auto start = std::chrono::steady_clock::now();
    detail::Outcome out;
    try {
      out = cat.at(name).run(cx, rng);
    } catch (const BudgetError&) {
      throw;
    } catch (const Error& e) {
      out = detail::verdict(false, e.what());
    }
    auto stop = std::chrono::steady_clock::now();
    rep.checks.push_back({name, out.status, std::move(out.summary), std::move(out.detail),
                          std::chrono::duration<double, std::milli>(stop - start).count()});
  }
  return rep;
}

inline Report run(const Scenario& s, const Options& opt = {}) { return run(build_context(s, opt)); }

} // namespace gaugemod::scenario

#endif
