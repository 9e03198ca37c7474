#include <cmath>
#include <set>

#include "huaharm/cli.hpp"
#include "huaharm/jordan.hpp"
#include "huaharm/kernels.hpp"
#include "json.hpp"

namespace huaharm::cli {

namespace {

using Params = std::map<std::string, std::string>;

// Required keys first, then optional ones with defaults; the column order follows this list.
struct KindSpec {
  std::vector<std::pair<std::string, std::string>> keys;  // empty default means required
  std::string sample;
};

const std::map<std::string, KindSpec>& kinds() {
  static const std::map<std::string, KindSpec> k = {
      {"hyper", {{{"gamma", ""}, {"beta", ""}, {"p", "0"}}, "x"}},
      {"legendre", {{{"beta", ""}, {"p", "0"}}, "x"}},
      {"g-radial", {{{"alpha", ""}, {"n", "1"}, {"kappa", "0"}, {"p", "0"}}, "x"}},
      {"q-mult", {{{"alpha", ""}, {"n", "1"}, {"xi", "1"}, {"p", "0"}}, "a"}},
      {"p-kernel", {{{"alpha", "0.5"}, {"n", "1"}, {"a", ""}, {"t", "0"}}, "rho"}},
  };
  return k;
}

double param(const std::string& kind, const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double d;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    throw ConfigError(kind + ": parameter '" + key + "' is not a number");
  }
  if (used != v.size()) throw ConfigError(kind + ": parameter '" + key + "' is not a number");
  return d;
}

int int_param(const std::string& kind, const std::string& key, double d, int lo) {
  if (d != std::floor(d) || d < lo || d > 1e6)
    throw ConfigError(kind + ": parameter '" + key + "' must be an integer >= " + std::to_string(lo));
  return static_cast<int>(d);
}

}  // namespace

Table tabulate(const std::string& kind, const std::map<std::string, std::string>& params,
               const std::vector<double>& grid) {
  auto it = kinds().find(kind);
  if (it == kinds().end()) throw ConfigError("unknown tabulation kind '" + kind + "'");
  if (grid.empty()) throw ConfigError(kind + ": grid must be non-empty");
  const auto& spec = it->second;
  std::set<std::string> known;
  for (const auto& [k, _] : spec.keys) known.insert(k);
  for (const auto& [k, _] : params)
    if (!known.count(k)) throw ConfigError(kind + ": unknown parameter '" + k + "'");

  std::map<std::string, double> v;
  Table t;
  t.name = kind;
  for (const auto& [k, def] : spec.keys) {
    auto p = params.find(k);
    if (p == params.end() && def.empty()) throw ConfigError(kind + ": missing parameter '" + k + "'");
    v[k] = param(kind, k, p == params.end() ? def : p->second);
    t.columns.push_back(k);
  }
  t.columns.push_back(spec.sample);
  t.columns.push_back("value");
  t.description = kind + " table; value at each " + spec.sample + " sample";

  RVec fixed;
  for (const auto& [k, _] : spec.keys) fixed.push_back(v[k]);
  auto row = [&](double s, double value) {
    RVec r = fixed;
    r.push_back(s);
    r.push_back(value);
    t.rows.push_back(std::move(r));
  };

  if (kind == "hyper") {
    const int p = int_param(kind, "p", v["p"], 0);
    BoundedHyperSolution s(v["gamma"], v["beta"]);
    for (double x : grid) row(x, s.derivative(p, x));
  } else if (kind == "legendre") {
    const int p = int_param(kind, "p", v["p"], 0);
    BoundedLegendreSolution s(v["beta"]);
    for (double x : grid) row(x, s.derivative(p, x));
  } else if (kind == "g-radial") {
    const int n = int_param(kind, "n", v["n"], 1), kappa = int_param(kind, "kappa", v["kappa"], 0),
              p = int_param(kind, "p", v["p"], 0);
    for (double x : grid) row(x, g_radial_derivative(v["alpha"], n, kappa, p, x));
  } else if (kind == "q-mult") {
    const int n = int_param(kind, "n", v["n"], 1), p = int_param(kind, "p", v["p"], 0);
    RadialMultiplier q(v["alpha"], n);
    RVec xi(2 * n, 0.0);
    xi[0] = v["xi"];
    for (double a : grid) row(a, q.derivative(p, a, xi));
  } else {
    const int n = int_param(kind, "n", v["n"], 1);
    if (!(v["a"] > 0.0)) throw ConfigError(kind + ": parameter 'a' must be positive");
    HKernelSpec hs;
    hs.alpha = v["alpha"];
    hs.n = n;
    const PKernel K(hs, v["a"]);
    for (double rho : grid) {
      HPoint w{CVec(n, 0.0), v["t"]};
      w.zeta[0] = rho;
      row(rho, K(w));
    }
  }
  return t;
}

std::string jordan_report(int r) {
  using namespace huaharm::jordan;
  using nlohmann::ordered_json;
  if (r < 1 || r > 6) throw ConfigError("jordan: rank must lie in 1..6");
  const auto V = JordanAlgebra::sym(r);
  const auto F = standard_frame(V);
  const auto P = peirce(V, F);
  const SGroup G(V, P);

  ordered_json j;
  j["algebra"] = "Sym(" + std::to_string(r) + ")";
  j["rank"] = r;
  j["dim"] = V.dim();
  j["d"] = V.d();
  const auto fr = check_frame(V, F);
  j["frame"] = {{"idempotent", fr.idempotent},
                {"orthogonal", fr.orthogonal},
                {"sum", fr.sum},
                {"primitive", fr.primitive},
                {"ok", fr.ok()}};
  const auto pr = check_peirce(V, P, Vec::LinSpaced(r, 0.3, 1.7));
  ordered_json blocks = ordered_json::array();
  for (std::size_t b = 0; b < P.blocks.size(); ++b)
    blocks.push_back({{"i", P.blocks[b].first + 1}, {"j", P.blocks[b].second + 1}, {"dim", P.vectors[b].cols()}});
  j["peirce"] = {{"blocks", blocks},
                 {"eigen", pr.eigen},
                 {"completeness", pr.completeness},
                 {"orthonormality", pr.orthonormality}};
  const auto w = adjoint_weight_check(G);
  j["weights"] = {{"v_dev", w.v_dev}, {"n_dev", w.n_dev}};
  if (r >= 2) {
    const auto br = splus_brackets(G);
    ordered_json e = ordered_json::array();
    for (const auto& [name, dev] : br.entries) e.push_back({{"relation", name}, {"deviation", dev}});
    j["brackets"] = {{"max_dev", br.max_dev}, {"entries", e}};
  }
  return j.dump(2) + "\n";
}

}  // namespace huaharm::cli
