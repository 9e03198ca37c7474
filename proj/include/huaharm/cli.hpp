#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace huaharm::cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& experiments();
// keys accepted by an experiment, with their default values
const std::map<std::string, std::string>& defaults_for(const std::string& experiment);

// Flat "key = value" configuration with '#' comments.
class RunConfig {
 public:
  static RunConfig parse(const std::string& text, const std::string& experiment);
  static RunConfig load(const std::string& path, const std::string& experiment);

  const std::string& experiment() const { return experiment_; }
  const std::map<std::string, std::string>& values() const { return values_; }
  std::string str(const std::string& key) const;
  double num(const std::string& key) const;
  int integer(const std::string& key) const;
  std::vector<double> list(const std::string& key) const;
  std::vector<int> int_list(const std::string& key) const;

 private:
  std::string experiment_;
  std::map<std::string, std::string> values_;
};

struct Check {
  std::string name;
  bool pass = false;
  std::map<std::string, double> values;
  std::map<std::string, std::string> notes;
};

struct Table {
  std::string name;  // file stem
  std::string description;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct SuiteResult {
  std::vector<std::string> declared;  // check names known before running
  std::vector<Check> checks;
  std::vector<Table> tables;
  std::map<std::string, std::string> summary;  // headline outcomes such as a verdict
  std::string error;  // set when the suite aborted
  bool all_pass() const;
};

SuiteResult run_suite(const RunConfig& cfg);

// %.17g rendering used by every CSV
std::string fmt17(double v);
std::string csv_text(const Table& t);
std::string manifest_text(const RunConfig& cfg, const SuiteResult& r, double wall_seconds);
// Writes manifest.json and the CSV tables after all computation.
void write_outputs(const std::string& dir, const RunConfig& cfg, const SuiteResult& r, double wall_seconds);

// Deterministic tabulation: kind in {hyper, legendre, g-radial, q-mult, p-kernel}.
Table tabulate(const std::string& kind, const std::map<std::string, std::string>& params, const std::vector<double>& grid);

// Frame, Peirce and weight reports for Sym(r) as JSON text.
std::string jordan_report(int r);

}  // namespace huaharm::cli
