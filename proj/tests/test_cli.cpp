#include <cmath>

#include "doctest.h"
#include "huaharm/cli.hpp"

using namespace huaharm::cli;

TEST_CASE("config parsing") {
  const auto c = RunConfig::parse("# comment\nalpha = 0.9   # trailing\n\nxi = 1, 2\n", "dichotomy-cn");
  CHECK(c.num("alpha") == 0.9);
  CHECK(c.list("xi") == std::vector<double>{1.0, 2.0});
  CHECK(c.integer("seed") == 0);
}

TEST_CASE("unknown keys are rejected by name") {
  try {
    RunConfig::parse("alhpa = 0.7\n", "dichotomy-cn");
    FAIL("no error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("alhpa") != std::string::npos);
  }
  CHECK_THROWS_AS(RunConfig::parse("exponent_tol = 0\n", "dichotomy-cn"), ConfigError);
  CHECK_THROWS_AS(RunConfig::parse("exponent_tol = -1\n", "dichotomy-cn"), ConfigError);
  CHECK_THROWS_AS(RunConfig::parse("gammas = \n", "specfun-suite"), ConfigError);
  CHECK_THROWS_AS(RunConfig::parse("just words\n", "specfun-suite"), ConfigError);
  CHECK_THROWS_AS(RunConfig::parse("", "no-such-suite"), ConfigError);
}

TEST_CASE("dichotomy-cn with constant data is regular and passes") {
  const auto c = RunConfig::parse("data = constant\n", "dichotomy-cn");
  const auto r = run_suite(c);
  CHECK(r.error.empty());
  CHECK(r.all_pass());
  CHECK(r.summary.at("verdict") == "regular");
  CHECK(r.checks.size() == r.declared.size());
}

TEST_CASE("dichotomy-cn with one mode blows up at the predicted rate") {
  const auto r = run_suite(RunConfig::parse("data = single-mode\n", "dichotomy-cn"));
  CHECK(r.all_pass());
  CHECK(r.summary.at("verdict") == "blow-up");
  CHECK(std::stod(r.summary.at("fitted_exponent")) == doctest::Approx(-0.3).epsilon(0.1));
}

TEST_CASE("manifests are reproducible apart from timing") {
  const auto c = RunConfig::parse("ranks = 2\n", "jordan-suite");
  const auto a = manifest_text(c, run_suite(c), 1.0), b = manifest_text(c, run_suite(c), 1.0);
  CHECK(a == b);
  CHECK(a.find("\"wall_seconds\"") != std::string::npos);
  CHECK(a.find("\"check_count\": 8") != std::string::npos);
}

TEST_CASE("tabulation") {
  const auto h = tabulate("hyper", {{"gamma", "2"}, {"beta", "0"}}, {0.0, 1.0, 2.0});
  REQUIRE(h.rows.size() == 3);
  CHECK(h.columns == std::vector<std::string>{"gamma", "beta", "p", "x", "value"});
  CHECK(h.rows[0].back() == doctest::Approx(1.0));
  CHECK(h.rows[1].back() == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(h.rows[2].back() == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));

  const auto q = tabulate("q-mult", {{"alpha", "0.7"}, {"xi", "1.5"}}, {0.0});
  CHECK(q.rows[0].back() == 1.0);

  // kappa = 0 is the beta = 0 hyper solution
  const auto g = tabulate("g-radial", {{"alpha", "2"}}, {0.0, 1.0, 2.0});
  for (std::size_t i = 0; i < 3; ++i) CHECK(g.rows[i].back() == doctest::Approx(h.rows[i].back()).epsilon(1e-14));

  CHECK(csv_text(h) == csv_text(tabulate("hyper", {{"gamma", "2"}, {"beta", "0"}}, {0.0, 1.0, 2.0})));
  CHECK_THROWS_AS(tabulate("hyper", {{"gamma", "2"}}, {1.0}), ConfigError);
  CHECK_THROWS_AS(tabulate("hyper", {{"gamma", "2"}, {"beta", "0"}, {"bogus", "1"}}, {1.0}), ConfigError);
  CHECK_THROWS_AS(tabulate("hyper", {{"gamma", "2"}, {"beta", "0"}}, {}), ConfigError);
}

TEST_CASE("17-digit rendering round-trips") {
  const double v = 0.1 + 0.2;
  CHECK(std::stod(fmt17(v)) == v);
  CHECK(fmt17(1.0) == "1");
}

TEST_CASE("jordan report is JSON with passing frame checks") {
  const auto s = jordan_report(2);
  CHECK(s.find("\"ok\": true") != std::string::npos);
  CHECK(s.find("\"blocks\"") != std::string::npos);
}
