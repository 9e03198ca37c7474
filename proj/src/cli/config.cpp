#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "huaharm/cli.hpp"

namespace huaharm::cli {

namespace {

using Defaults = std::map<std::string, std::string>;

const std::map<std::string, Defaults>& table() {
  static const std::map<std::string, Defaults> t = {
      {"specfun-suite",
       {{"seed", "0"},
        {"gammas", "0.5, 1, 1.3, 2, 2.5"},
        {"betas", "0, 1, 2"},
        {"legendre_betas", "0.5, 1, 1.5"},
        {"grid_lo", "0.1"},
        {"grid_hi", "10"},
        {"grid_n", "20"},
        {"residual_tol", "1e-6"},
        {"exponent_tol", "0.02"}}},
      {"dichotomy-cn",
       {{"seed", "0"},
        {"alpha", "0.7"},
        {"n", "1"},
        {"data", "single-mode"},
        {"xi", "1"},
        {"bump_lo", "0.5"},
        {"bump_hi", "2"},
        {"a_lo", "1e-4"},
        {"a_hi", "1"},
        {"samples", "25"},
        {"fit_lo", "1e-4"},
        {"fit_hi", "1e-2"},
        {"exponent_tol", "0.03"},
        {"flat_tol", "0.01"}}},
      {"dichotomy-heis",
       {{"seed", "0"},
        {"alpha", "0.5"},
        {"n", "1"},
        {"kappa", "1"},
        {"lambdas", "0.75, 1, 1.5"},
        {"bump_lo", "0.5"},
        {"bump_hi", "2"},
        {"a_lo", "1e-4"},
        {"a_hi", "1"},
        {"samples", "25"},
        {"fit_lo", "1e-4"},
        {"fit_hi", "1e-2"},
        {"exponent_tol", "0.03"}}},
      {"hua-suite",
       {{"seed", "0"},
        {"ranks", "2, 3"},
        {"points", "5"},
        {"annihilation_tol", "1e-4"},
        {"control_min", "0.5"},
        {"base_tol", "1e-5"},
        {"identification_tol", "1e-4"}}},
      {"jordan-suite",
       {{"seed", "0"},
        {"ranks", "2, 3"},
        {"algebra_tol", "1e-10"},
        {"jacobian_points", "20"},
        {"jacobian_tol", "1e-6"},
        {"membership_points", "100"}}},
      {"kernel-tab",
       {{"seed", "0"},
        {"alpha", "0.5"},
        {"n", "1"},
        {"a_values", "0.5"},
        {"box_t", "40"},
        {"box_r", "6.32455532033676"},
        {"mass_tol", "0.02"},
        {"rho", "0, 0.5, 1, 2"},
        {"t", "0, 1"}}},
  };
  return t;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': not a number: '" + v + "'");
  }
  if (trim(v.substr(used)) != "") throw ConfigError("key '" + key + "': not a number: '" + v + "'");
  return d;
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool ends_with(const std::string& s, const std::string& tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

void validate(const RunConfig& c) {
  for (const auto& [key, v] : c.values()) {
    if (ends_with(key, "_tol") || key == "control_min") {
      if (!(c.num(key) > 0.0)) throw ConfigError("key '" + key + "': tolerance must be > 0");
    }
    if (key == "gammas" || key == "betas" || key == "legendre_betas" || key == "ranks" || key == "a_values" ||
        key == "rho" || key == "t" || key == "lambdas" || key == "xi") {
      if (c.list(key).empty()) throw ConfigError("key '" + key + "': grid must be non-empty");
    }
    if (key == "samples" || key == "grid_n" || key == "points" || key == "jacobian_points" ||
        key == "membership_points") {
      if (c.integer(key) < 1) throw ConfigError("key '" + key + "': grid must be non-empty");
    }
  }
  if (c.values().count("seed") && c.integer("seed") < 0) throw ConfigError("key 'seed': must be non-negative");
}

}  // namespace

const std::vector<std::string>& experiments() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : table()) v.push_back(k);
    return v;
  }();
  return names;
}

const std::map<std::string, std::string>& defaults_for(const std::string& experiment) {
  auto it = table().find(experiment);
  if (it == table().end()) throw ConfigError("unknown experiment '" + experiment + "'");
  return it->second;
}

RunConfig RunConfig::parse(const std::string& text, const std::string& experiment) {
  RunConfig c;
  c.experiment_ = experiment;
  c.values_ = defaults_for(experiment);
  std::stringstream in(text);
  std::string line;
  int lineno = 0;
  std::set<std::string> seen;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "experiment") {
      if (val != experiment) throw ConfigError("config is for experiment '" + val + "', not '" + experiment + "'");
      continue;
    }
    if (!c.values_.count(key)) throw ConfigError("unknown key '" + key + "' for experiment '" + experiment + "'");
    if (!seen.insert(key).second) throw ConfigError("duplicate key '" + key + "'");
    if (val.empty()) throw ConfigError("key '" + key + "': empty value");
    c.values_[key] = val;
  }
  validate(c);
  return c;
}

RunConfig RunConfig::load(const std::string& path, const std::string& experiment) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str(), experiment);
}

std::string RunConfig::str(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing key '" + key + "'");
  return it->second;
}

double RunConfig::num(const std::string& key) const { return to_double(key, str(key)); }

int RunConfig::integer(const std::string& key) const {
  const double d = num(key);
  if (d != std::floor(d) || std::abs(d) > 1e9) throw ConfigError("key '" + key + "': expected an integer");
  return static_cast<int>(d);
}

std::vector<double> RunConfig::list(const std::string& key) const {
  std::vector<double> out;
  for (const auto& item : split_list(str(key))) out.push_back(to_double(key, item));
  return out;
}

std::vector<int> RunConfig::int_list(const std::string& key) const {
  std::vector<int> out;
  for (double d : list(key)) {
    if (d != std::floor(d)) throw ConfigError("key '" + key + "': expected integers");
    out.push_back(static_cast<int>(d));
  }
  return out;
}

}  // namespace huaharm::cli
