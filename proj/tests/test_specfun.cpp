#include <cmath>
#include <random>

#include "doctest.h"
#include "huaharm/parallel.hpp"
#include "huaharm/specfun.hpp"
#include "oracles.hpp"

using namespace huaharm;

TEST_CASE("gauss rules integrate their weight classes") {
  const auto gl = gauss_legendre(10);
  CHECK(gl.apply([](double x) { return x * x * x * x; }) == doctest::Approx(0.4).epsilon(1e-14));
  const auto gh = gauss_hermite(40);
  CHECK(gh.apply([](double x) { return x * x; }) == doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-13));
  const auto lg = gauss_laguerre(30, 0.5);
  // int x^{1/2} e^{-x} x^2 dx = Gamma(3.5)
  CHECK(lg.apply([](double x) { return x * x; }) == doctest::Approx(std::tgamma(3.5)).epsilon(1e-12));
}

TEST_CASE("adaptive integration handles the half line") {
  double v = integrate_halfline([](double x) { return std::exp(-x) * std::cos(x); }, 0.0);
  CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
  v = integrate_gk([](double x) { return 1.0 / std::sqrt(x); }, 1e-8, 1.0);
  CHECK(v == doctest::Approx(2.0 - 2e-4).epsilon(1e-10));
}

TEST_CASE("elementary special functions") {
  CHECK(pochhammer(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5));
  CHECK(hyp1f1(1.0, 2.0, 1.5) == doctest::Approx((std::exp(1.5) - 1.0) / 1.5).epsilon(1e-13));
  for (double x : {0.1, 1.0, 4.0})
    CHECK(hyp0f1(1.0, x) == doctest::Approx(std::cyl_bessel_i(0.0, 2.0 * std::sqrt(x))).epsilon(1e-12));
  CHECK(beta_fn(2.0, 3.0) == doctest::Approx(1.0 / 12.0));
}

TEST_CASE("hermite functions are orthonormal") {
  const auto rule = gauss_hermite(64);
  double dev = 0.0;
  for (int j = 0; j <= 10; ++j)
    for (int k = 0; k <= 10; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < rule.node_count(); ++i) {
        const double x = rule.nodes[i];
        s += rule.weights[i] * std::exp(x * x) * hermite(j, x) * hermite(k, x);
      }
      dev = std::max(dev, std::abs(s - (j == k ? 1.0 : 0.0)));
    }
  CHECK(dev < 1e-10);
}

TEST_CASE("laguerre recurrence matches the explicit sum") {
  for (double a : {0.0, 0.5, 2.0}) {
    const auto all = laguerre_all(8, a, 1.7);
    for (int k = 0; k <= 8; ++k) CHECK(all[k] == doctest::Approx(oracle::laguerre(k, a, 1.7)).epsilon(1e-11));
  }
  // damped values survive arguments where e^{-t/2} alone underflows
  const auto d = laguerre_damped(40, 0.0, 1800.0);
  for (double v : d) CHECK(std::isfinite(v));
  CHECK(laguerre(2, 3.0) == doctest::Approx((9.0 - 12.0 + 2.0) / 2.0));
}

TEST_CASE("singular index convention") {
  CHECK(singular_index(0.5) == 1);
  CHECK(singular_index(1.0) == 1);
  CHECK(singular_index(1.3) == 2);
  CHECK(singular_index(2.0) == 2);
  CHECK(singular_index(2.5) == 3);
}

TEST_CASE("bounded hyper solution with beta = 0 is the exponential") {
  for (double g : {0.5, 2.0, 2.5}) {
    BoundedHyperSolution s(g, 0.0);
    for (double x : {0.0, 1.0, 2.0, 7.0}) CHECK(s.evaluate(x) == doctest::Approx(std::exp(-x)).epsilon(1e-12));
  }
}

TEST_CASE("bounded hyper solution matches backward shooting") {
  const std::vector<double> xs = geometric_grid(0.1, 10.0, 20);
  for (double g : {0.5, 1.3, 2.5})
    for (double b : {1.0, 2.0}) {
      BoundedHyperSolution s(g, b);
      auto ref = oracle::shoot_hyper(g, b, xs);
      const double scale = s.evaluate(xs[0]) / ref[0];
      for (std::size_t i = 0; i < xs.size(); ++i)
        CHECK(s.evaluate(xs[i]) == doctest::Approx(scale * ref[i]).epsilon(1e-6));
      CHECK(s.evaluate(0.0) == doctest::Approx(1.0));
    }
}

TEST_CASE("hyper derivatives above the singular index are refused") {
  BoundedHyperSolution s(0.5, 1.0);
  CHECK(s.k() == 1);
  CHECK_NOTHROW(s.derivative(1, 0.3));
  CHECK_THROWS(s.derivative(kIndexGuard + 1, 0.3));
}

TEST_CASE("bounded legendre solution equals the Bessel-K form") {
  for (double b : {0.5, 1.0, 1.5}) {
    BoundedLegendreSolution z(b);
    CHECK(z.evaluate(0.0) == 1.0);
    for (double x : {0.1, 0.5, 1.0, 2.5, 5.0})
      CHECK(z.evaluate(x) == doctest::Approx(oracle::legendre_bounded(b, x)).epsilon(1e-9));
  }
}

TEST_CASE("exponent fit recovers synthetic powers and logs") {
  const auto x = geometric_grid(1e-4, 1e-2, 16);
  std::vector<double> d, l;
  for (double v : x) {
    d.push_back(2.0 * std::pow(v, -0.37) + 1.0 + 3.0 * v);
    l.push_back(-1.5 * std::log(v) + 0.2 + v);
  }
  const auto f = fit_exponent(x, d);
  CHECK_FALSE(f.log_flag);
  CHECK(f.exponent == doctest::Approx(-0.37).epsilon(1e-3));
  CHECK(fit_exponent(x, l).log_flag);
}

TEST_CASE("exponent fit refuses noise") {
  const auto x = geometric_grid(1e-4, 1e-2, 16);
  std::mt19937_64 rng(0);
  std::normal_distribution<double> nd;
  std::vector<double> d;
  for (std::size_t i = 0; i < x.size(); ++i) d.push_back(nd(rng));
  CHECK_THROWS_AS(fit_exponent(x, d), FitFailure);
}

TEST_CASE("parallel_for covers every index and rethrows") {
  std::vector<int> hit(100, 0);
  parallel_for(hit.size(), [&](std::size_t i) { hit[i] += 1; });
  for (int h : hit) CHECK(h == 1);
  CHECK_THROWS(parallel_for(10, [](std::size_t i) {
    if (i == 7) throw std::runtime_error("boom");
  }));
}
