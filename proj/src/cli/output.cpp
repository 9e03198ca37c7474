#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "huaharm/cli.hpp"
#include "json.hpp"

namespace huaharm::cli {

using nlohmann::ordered_json;

bool SuiteResult::all_pass() const {
  if (!error.empty() || checks.size() != declared.size()) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_text(const Table& t) {
  std::string s = "# " + t.description + "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) s += (i ? "," : "") + t.columns[i];
  s += "\n";
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size()) throw std::logic_error("csv: row width mismatch in " + t.name);
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + fmt17(row[i]);
    s += "\n";
  }
  return s;
}

namespace {

// JSON cannot hold inf or nan, so those go in as strings
ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return fmt17(v);
}

}  // namespace

std::string manifest_text(const RunConfig& cfg, const SuiteResult& r, double wall_seconds) {
  ordered_json m;
  m["experiment"] = cfg.experiment();
  m["version"] = HUAHARM_VERSION;
  m["seed"] = cfg.values().count("seed") ? cfg.integer("seed") : 0;
  ordered_json conf = ordered_json::object();
  for (const auto& [k, v] : cfg.values()) conf[k] = v;
  m["config"] = conf;
  m["declared_checks"] = r.declared;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    ordered_json vals = ordered_json::object();
    for (const auto& [k, v] : c.values) vals[k] = number(v);
    j["values"] = vals;
    if (!c.notes.empty()) {
      ordered_json notes = ordered_json::object();
      for (const auto& [k, v] : c.notes) notes[k] = v;
      j["notes"] = notes;
    }
    checks.push_back(j);
  }
  m["checks"] = checks;
  ordered_json summary = ordered_json::object();
  for (const auto& [k, v] : r.summary) summary[k] = v;
  m["summary"] = summary;
  m["check_count"] = r.checks.size();
  m["all_pass"] = r.all_pass();
  ordered_json outs = ordered_json::array();
  for (const auto& t : r.tables) outs.push_back(t.name + ".csv");
  m["outputs"] = outs;
  if (!r.error.empty()) m["error"] = r.error;
  m["timing"] = {{"wall_seconds", wall_seconds}};
  return m.dump(2) + "\n";
}

void write_outputs(const std::string& dir, const RunConfig& cfg, const SuiteResult& r, double wall_seconds) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto put = [&](const std::string& name, const std::string& text) {
    std::ofstream f(fs::path(dir) / name, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + (fs::path(dir) / name).string());
    f << text;
  };
  for (const auto& t : r.tables) put(t.name + ".csv", csv_text(t));
  put("manifest.json", manifest_text(cfg, r, wall_seconds));
}

}  // namespace huaharm::cli
