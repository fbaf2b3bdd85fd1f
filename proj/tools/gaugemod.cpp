// gaugemod: batch verification of gauge modules over smooth affine varieties.

#include <gaugemod/scenario.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace gaugemod;
using namespace gaugemod::scenario;

namespace {

struct Flags {
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::optional<int> max_degree;
  bool text = false;
  bool timing = false;
};

Options options(const Flags& f) { return {f.seed, f.samples, f.max_degree}; }

int emit(const Report& r, const Flags& f) {
  if (f.text)
    std::cout << r.to_text(f.timing);
  else
    std::cout << r.to_json(f.timing).dump(2) << "\n";
  return r.exit_code();
}

int run_file(const std::string& path, std::vector<std::string> checks, const Flags& f) {
  Scenario s = load_scenario(path);
  if (!checks.empty()) s.checks = std::move(checks);
  return emit(run(s, options(f)), f);
}

std::vector<std::string> join(std::initializer_list<std::vector<std::string>> parts) {
  std::vector<std::string> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of gauge modules, de Rham complexes and the circle module N(alpha)"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  app.add_option("--seed", flags.seed, "Random seed for sampled checks");
  app.add_option("--samples", flags.samples, "Samples per property check");
  app.add_option("--max-degree", flags.max_degree, "Degree bound D for the obstruction search");
  auto* fmt = app.add_option_group("format");
  fmt->add_flag("--text", flags.text, "Human-readable output");
  bool json_flag = false;
  fmt->add_flag("--json", json_flag, "JSON report (default)");
  fmt->require_option(0, 1);
  app.add_flag("--timing", flags.timing, "Include per-check timings");

  std::string path;
  std::function<int()> action;

  auto* variety = app.add_subcommand("variety", "Variety checks on a scenario file");
  variety->require_subcommand(1);
  auto* vcheck = variety->add_subcommand("check", "Groebner basis, rank, smoothness and chart frames");
  vcheck->add_option("scenario", path, "Scenario JSON")->required();
  vcheck->callback([&] {
    action = [&] { return run_file(path, join({checks_with_prefix("groebner."), checks_with_prefix("variety.")}), flags); };
  });
  auto* vcharts = variety->add_subcommand("charts", "List the Jacobian charts");
  vcharts->add_option("scenario", path, "Scenario JSON")->required();
  vcharts->callback([&] { action = [&] { return run_file(path, {"variety.charts", "variety.rank"}, flags); }; });

  auto* gauge = app.add_subcommand("gauge", "Gauge-module checks");
  gauge->require_subcommand(1);
  auto* gverify = gauge->add_subcommand("verify", "Axioms, Lie action, AV-compatibility and twist");
  gverify->add_option("scenario", path, "Scenario JSON")->required();
  gverify->callback([&] { action = [&] { return run_file(path, checks_with_prefix("gauge."), flags); }; });

  auto* derham = app.add_subcommand("derham", "de Rham complex checks");
  derham->require_subcommand(1);
  auto* dverify = derham->add_subcommand("verify", "Chain complex, morphism, kernel witnesses and obstruction");
  dverify->add_option("scenario", path, "Scenario JSON")->required();
  dverify->callback([&] {
    action = [&] {
      Scenario s = load_scenario(path);
      s.checks = {"derham.complex", "derham.kernel", "derham.morphism", "derham.not_a_morphism"};
      if (s.obstruction) s.checks.push_back("derham.obstruction");
      return emit(run(s, options(flags)), flags);
    };
  });

  auto* casimir = app.add_subcommand("casimir", "Central characters of exterior powers");
  casimir->require_subcommand(1);
  auto* table = casimir->add_subcommand("table", "Omega_k and P_k on Lambda^k Q^N");
  int rank = 2;
  table->add_option("N", rank, "Rank of gl_N")->required()->check(CLI::Range(1, 4));
  table->callback([&] {
    action = [&] {
      Scenario s;
      s.name = "casimir-table-" + std::to_string(rank);
      s.casimir_rank = rank;
      s.checks = {"casimir.table"};
      Report r = run(s, options(flags));
      if (flags.text) {
        std::cout << r.checks.front().detail["text"].get<std::string>();
        return r.exit_code();
      }
      return emit(r, flags);
    };
  });

  auto* circle = app.add_subcommand("circle", "The module N(alpha) over the Witt algebra");
  circle->require_subcommand(1);
  auto* cverify = circle->add_subcommand("verify", "Formulas, Casimir, annihilators, basis and gauge crosscheck");
  std::string alpha = "0";
  int grid = 3;
  cverify->add_option("--alpha", alpha, "Rational alpha, e.g. 1/2");
  cverify->add_option("--grid", grid, "Index range [-grid, grid]")->check(CLI::Range(0, 6));
  cverify->callback([&] {
    action = [&] {
      Scenario s;
      s.name = "circle-" + alpha;
      s.circle = json{{"alpha", alpha}, {"grid", grid}};
      s.checks = checks_with_prefix("circle.");
      return emit(run(s, options(flags)), flags);
    };
  });

  auto* runner = app.add_subcommand("run", "Run the checks listed in a scenario file");
  runner->add_option("scenario", path, "Scenario JSON")->required();
  runner->callback([&] { action = [&] { return run_file(path, {}, flags); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
}
