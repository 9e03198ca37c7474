#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "huaharm/specfun.hpp"

namespace huaharm {

int singular_index(double g) {
  double f = std::floor(g);
  return g == f ? static_cast<int>(f) : static_cast<int>(f) + 1;
}

namespace {
constexpr int kLaguerreNodes = 48;
constexpr double kAgreement = 1e-10;

AdaptiveOptions tight() {
  AdaptiveOptions o;
  o.abs_tol = 0.0;
  o.rel_tol = 1e-13;
  o.max_depth = 60;
  return o;
}
}  // namespace

BoundedHyperSolution::BoundedHyperSolution(double gamma, double beta) : gamma_(gamma), beta_(beta) {
  if (!(gamma > 0.0)) throw std::invalid_argument("bounded_hyper: gamma must be positive");
  if (!(beta >= 0.0)) throw std::invalid_argument("bounded_hyper: beta must be non-negative");
  k_ = singular_index(gamma);
  const double theta = 0.5 * beta;
  if (beta > 0.0) {
    log_norm_ = std::lgamma(theta) + std::lgamma(gamma + 1.0) - std::lgamma(theta + gamma + 1.0);
    rule_ = cached_laguerre(kLaguerreNodes, theta - 1.0);
    rule2_ = &cached_laguerre(2 * kLaguerreNodes, theta - 1.0);
  } else {
    log_norm_ = 0.0;
    rule_.kind = RuleKind::AdaptiveHalfline;
  }
}

// With s = 2xt the weight t^{theta-1} e^{-2xt} becomes a generalized Laguerre weight.
double BoundedHyperSolution::laguerre_path(int p, double x, const QuadratureRule& r) const {
  const double theta = 0.5 * beta_;
  const double expo = gamma_ + theta + 1.0;
  double s = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    const double si = r.nodes[i];
    double f = std::exp(-expo * std::log1p(si / (2.0 * x)));
    if (p > 0) f *= std::pow(-(1.0 + si / x), p);
    s += r.weights[i] * f;
  }
  return s * std::exp(-x - theta * std::log(2.0 * x) - log_norm_);
}

double BoundedHyperSolution::adaptive_path(int p, double x) const {
  const double theta = 0.5 * beta_;
  const double expo = gamma_ + theta + 1.0;
  const double sign = (p % 2 == 0) ? 1.0 : -1.0;
  const auto opt = tight();
  // t in [0, 1] with t = v^{1/theta}
  auto fa = [&](double v) {
    double t = std::pow(v, 1.0 / theta);
    return std::exp(-expo * std::log1p(t) - 2.0 * x * t) * std::pow(1.0 + 2.0 * t, p);
  };
  double partA = integrate_gk(fa, 0.0, 1.0, opt) / theta;
  // t in [1, inf) with t = 1/u
  auto fb = [&](double u) {
    if (u <= 0.0) return 0.0;
    double l = (gamma_ - p) * std::log(u) + p * std::log(u + 2.0) - expo * std::log1p(u) - 2.0 * x / u;
    return std::exp(l);
  };
  std::vector<double> brk{0.0};
  if (x > 0.0)
    for (double c : {0.1, 1.0, 10.0}) {
      double b = 2.0 * x * c;
      if (b > brk.back() && b < 1.0) brk.push_back(b);
    }
  brk.push_back(1.0);
  double partB = 0.0;
  for (std::size_t i = 0; i + 1 < brk.size(); ++i) partB += integrate_gk(fb, brk[i], brk[i + 1], opt);
  return sign * (partA + partB) * std::exp(-x - log_norm_);
}

double BoundedHyperSolution::raw_derivative(int p, double x) const {
  if (p < 0) throw std::invalid_argument("derivative order must be non-negative");
  if (x < 0.0) throw std::domain_error("bounded_hyper: x must be non-negative");
  if (beta_ == 0.0) return ((p % 2 == 0) ? 1.0 : -1.0) * std::exp(-x);
  if (x == 0.0) {
    if (p == 0) return 1.0;
    if (p >= gamma_ + 1.0) throw std::domain_error("bounded_hyper: derivative unbounded at 0");
    return adaptive_path(p, 0.0);
  }
  double v1 = laguerre_path(p, x, rule_);
  double v2 = laguerre_path(p, x, *rule2_);
  if (std::abs(v1 - v2) <= kAgreement * std::abs(v2)) return v2;
  return adaptive_path(p, x);
}

double BoundedHyperSolution::derivative(int p, double x) const {
  if (p > k_ + 1) throw std::out_of_range("bounded_hyper: derivative order exceeds k+1");
  return raw_derivative(p, x);
}

double BoundedHyperSolution::residual(double x) const {
  double y = raw_derivative(0, x), y1 = raw_derivative(1, x), y2 = raw_derivative(2, x);
  return x * y2 - gamma_ * y1 - (x + gamma_ + beta_) * y;
}

BoundedLegendreSolution::BoundedLegendreSolution(double beta) : beta_(beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("bounded_legendre: beta must be positive");
  k_ = singular_index(beta);
  norm_ = std::tgamma(beta + 1.0);
  rule_.kind = RuleKind::AdaptiveHalfline;
}

// z^{(p)}(x) = Gamma(beta+1)^{-1} int_0^inf (-1/u)^p u^beta e^{-u - x/u} du
double BoundedLegendreSolution::raw_derivative(int p, double x) const {
  if (p < 0) throw std::invalid_argument("derivative order must be non-negative");
  if (x < 0.0) throw std::domain_error("bounded_legendre: x must be non-negative");
  const double sign = (p % 2 == 0) ? 1.0 : -1.0;
  if (x == 0.0) {
    if (p == 0) return 1.0;
    if (beta_ + 1.0 - p <= 0.0) throw std::domain_error("bounded_legendre: derivative unbounded at 0");
    return sign * std::exp(std::lgamma(beta_ + 1.0 - p) - std::lgamma(beta_ + 1.0));
  }
  const double q = beta_ - p;
  const double lg = std::lgamma(beta_ + 1.0);
  auto f = [&](double u) {
    if (u <= 0.0) return 0.0;
    return std::exp(q * std::log(u) - u - x / u - lg);
  };
  const double ustar = 0.5 * (q + std::sqrt(q * q + 4.0 * x));
  std::vector<double> brk{0.0};
  for (double b = 1e-2 * ustar; b < 50.0; b *= 10.0) brk.push_back(b);
  for (double b : {1.0, std::max(0.0, q) + 1.0, 50.0 + 2.0 * std::max(0.0, q)}) brk.push_back(b);
  std::sort(brk.begin(), brk.end());
  brk.erase(std::unique(brk.begin(), brk.end()), brk.end());
  const auto opt = tight();
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < brk.size(); ++i) s += integrate_gk(f, brk[i], brk[i + 1], opt);
  s += integrate_halfline(f, brk.back(), opt);
  return sign * s;
}

double BoundedLegendreSolution::derivative(int p, double x) const {
  if (p > k_ + 1) throw std::out_of_range("bounded_legendre: derivative order exceeds k+1");
  return raw_derivative(p, x);
}

double BoundedLegendreSolution::residual(double x) const {
  double z = raw_derivative(0, x), z1 = raw_derivative(1, x), z2 = raw_derivative(2, x);
  return x * z2 - beta_ * z1 - z;
}

double ode_derivative(const BoundedHyperSolution& sol, int p, double x) { return sol.derivative(p, x); }
double ode_derivative(const BoundedLegendreSolution& sol, int p, double x) { return sol.derivative(p, x); }

}  // namespace huaharm
