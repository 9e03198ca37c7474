#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "huaharm/cli.hpp"
#include "huaharm/specfun.hpp"

namespace cli = huaharm::cli;

namespace {

struct TabulateArgs {
  std::string kind;
  std::vector<std::string> params;
  std::vector<double> grid;
  double lo = 0.0, hi = 1.0;
  int count = 0;
  bool geometric = false;
  std::string out;
};

void add_tabulate_options(CLI::App* sub, TabulateArgs& t, const std::vector<std::string>& allowed) {
  sub->add_option("kind", t.kind, "table kind")->required()->check(CLI::IsMember(allowed));
  sub->add_option("--param,-p", t.params, "parameter as key=value (repeatable)");
  sub->add_option("--grid", t.grid, "explicit sample list")->delimiter(',');
  sub->add_option("--lo", t.lo, "first sample of a generated grid");
  sub->add_option("--hi", t.hi, "last sample of a generated grid");
  sub->add_option("--count", t.count, "number of generated samples");
  sub->add_flag("--geometric", t.geometric, "geometric instead of uniform spacing");
  sub->add_option("--out,-o", t.out, "CSV file (stdout when omitted)");
}

int run_tabulate(const TabulateArgs& t) {
  std::map<std::string, std::string> params;
  for (const auto& kv : t.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw cli::ConfigError("parameter '" + kv + "' is not key=value");
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  std::vector<double> grid = t.grid;
  if (t.count > 0) {
    if (!grid.empty()) throw cli::ConfigError("use either --grid or --count, not both");
    if (t.geometric) {
      grid = huaharm::geometric_grid(t.lo, t.hi, t.count);
    } else {
      for (int i = 0; i < t.count; ++i)
        grid.push_back(t.count == 1 ? t.lo : t.lo + (t.hi - t.lo) * i / (t.count - 1));
    }
  }
  const auto text = cli::csv_text(cli::tabulate(t.kind, params, grid));
  if (t.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(t.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + t.out);
    f << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic analysis on Siegel and tube domains: verification suites and tables"};
  app.set_version_flag("--version", HUAHARM_VERSION);
  app.require_subcommand(1);

  std::string config, out;
  std::map<std::string, CLI::App*> suites;
  for (const auto& e : cli::experiments()) {
    auto* sub = app.add_subcommand(e, "run the " + e + " experiment");
    sub->add_option("--config,-c", config, "key = value configuration file (defaults when omitted)");
    sub->add_option("--out,-o", out, "output directory (default results/<experiment>)");
    suites[e] = sub;
  }

  TabulateArgs tab, spec;
  auto* tsub = app.add_subcommand("tabulate", "write a deterministic CSV table");
  add_tabulate_options(tsub, tab, {"hyper", "legendre", "g-radial", "q-mult", "p-kernel"});
  auto* ssub = app.add_subcommand("specfun", "tabulate the special-function solutions");
  add_tabulate_options(ssub, spec, {"hyper", "legendre"});

  int rank = 2;
  auto* jsub = app.add_subcommand("jordan", "frame, Peirce and weight report for Sym(r) as JSON");
  jsub->add_option("--rank,-r", rank, "rank r of Sym(r)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tsub->parsed()) return run_tabulate(tab);
    if (ssub->parsed()) return run_tabulate(spec);
    if (jsub->parsed()) {
      std::cout << cli::jordan_report(rank);
      return 0;
    }
    for (const auto& [name, sub] : suites) {
      if (!sub->parsed()) continue;
      const auto cfg = config.empty() ? cli::RunConfig::parse("", name) : cli::RunConfig::load(config, name);
      const auto t0 = std::chrono::steady_clock::now();
      const auto result = cli::run_suite(cfg);
      const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const std::string dir = out.empty() ? "results/" + name : out;
      cli::write_outputs(dir, cfg, result, wall);
      int failed = 0;
      for (const auto& c : result.checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
        failed += !c.pass;
      }
      if (!result.error.empty()) std::cerr << "suite error: " << result.error << "\n";
      for (const auto& [k, v] : result.summary) std::cout << k << ": " << v << "\n";
      std::cout << result.checks.size() << " checks, " << failed << " failed; outputs in " << dir << "\n";
      return result.all_pass() ? 0 : 1;
    }
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
