#include <cmath>
#include <stdexcept>

#include "huaharm/specfun.hpp"

namespace huaharm {

double pochhammer(double a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: n must be non-negative");
  double p = 1.0;
  for (int i = 0; i < n; ++i) p *= a + i;
  return p;
}

namespace {
bool nonpositive_integer(double c) { return c <= 0.0 && c == std::floor(c); }
}  // namespace

double hyp1f1(double a, double c, double x) {
  if (nonpositive_integer(c)) throw std::domain_error("hyp1f1: c is a non-positive integer");
  double term = 1.0, sum = 1.0;
  for (int n = 0; n < 20000; ++n) {
    term *= (a + n) / (c + n) * x / (n + 1);
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && n > std::abs(x)) return sum;
  }
  throw std::runtime_error("hyp1f1: series did not converge");
}

double hyp0f1(double c, double x) {
  if (nonpositive_integer(c)) throw std::domain_error("hyp0f1: c is a non-positive integer");
  double term = 1.0, sum = 1.0;
  for (int n = 0; n < 20000; ++n) {
    term *= x / ((c + n) * (n + 1));
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && (n + 1) * (n + 1) > std::abs(x)) return sum;
  }
  throw std::runtime_error("hyp0f1: series did not converge");
}

double beta_fn(double a, double b) { return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b)); }

int abs_index(const MultiIdx& k) {
  int s = 0;
  for (int v : k) {
    if (v < 0) throw std::invalid_argument("multi-index entries must be non-negative");
    s += v;
  }
  return s;
}

void check_guard(const MultiIdx& k) {
  if (abs_index(k) > kIndexGuard) throw std::out_of_range("multi-index exceeds the order guard");
}

std::vector<double> hermite_all(int kmax, double x) {
  if (kmax < 0 || kmax > kIndexGuard) throw std::out_of_range("hermite: order outside [0, 60]");
  std::vector<double> h(kmax + 1);
  const double g = std::exp(-0.5 * x * x);
  double prev = 0.0, cur = std::pow(M_PI, -0.25);
  h[0] = cur * g;
  for (int k = 0; k < kmax; ++k) {
    double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
    h[k + 1] = cur * g;
  }
  return h;
}

double hermite(int k, double x) { return hermite_all(k, x)[k]; }

double hermite_multi(const MultiIdx& k, const std::vector<double>& x) {
  if (k.size() != x.size()) throw std::invalid_argument("hermite_multi: dimension mismatch");
  check_guard(k);
  double p = 1.0;
  for (std::size_t j = 0; j < k.size(); ++j) p *= hermite(k[j], x[j]);
  return p;
}

double hermite_scaled(const MultiIdx& k, double lambda, const std::vector<double>& x) {
  if (lambda == 0.0) throw std::invalid_argument("hermite_scaled: lambda must be nonzero");
  const double s = 2.0 * M_PI * std::abs(lambda);
  std::vector<double> y(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) y[j] = std::sqrt(s) * x[j];
  return std::pow(s, 0.25 * x.size()) * hermite_multi(k, y);
}

std::vector<double> laguerre_all(int kmax, double a, double t) {
  std::vector<double> L(kmax + 1);
  L[0] = 1.0;
  if (kmax >= 1) L[1] = 1.0 + a - t;
  for (int k = 1; k < kmax; ++k) L[k + 1] = ((2.0 * k + a + 1.0 - t) * L[k] - (k + a) * L[k - 1]) / (k + 1);
  return L;
}

std::vector<double> laguerre_damped(int kmax, double a, double t) {
  std::vector<double> out(kmax + 1);
  double prev = 0.0, cur = 1.0, logscale = 0.0;
  double factor = std::exp(-0.5 * t);
  out[0] = factor;
  for (int k = 0; k < kmax; ++k) {
    double next = k == 0 ? (1.0 + a - t) * cur : ((2.0 * k + a + 1.0 - t) * cur - (k + a) * prev) / (k + 1);
    prev = cur;
    cur = next;
    double m = std::max(std::abs(cur), std::abs(prev));
    if (m > 1e20 || (m < 1e-20 && m > 0.0)) {
      prev /= m;
      cur /= m;
      logscale += std::log(m);
      factor = std::exp(logscale - 0.5 * t);
    }
    out[k + 1] = cur * factor;
  }
  return out;
}

double laguerre(int k, double t) {
  if (k < 0 || k > kIndexGuard) throw std::out_of_range("laguerre: order outside [0, 60]");
  return laguerre_all(k, 0.0, t)[k];
}

double laguerre_product(const MultiIdx& k, const CVec& zeta) {
  if (k.size() != zeta.size()) throw std::invalid_argument("laguerre_product: dimension mismatch");
  check_guard(k);
  double p = 1.0;
  for (std::size_t j = 0; j < k.size(); ++j) p *= laguerre(k[j], 0.5 * std::norm(zeta[j]));
  return p;
}

double phi_k(const MultiIdx& k, const CVec& zeta) {
  double r2 = 0.0;
  for (const auto& z : zeta) r2 += std::norm(z);
  const double n = static_cast<double>(zeta.size());
  return std::pow(2.0 * M_PI, -0.5 * n) * laguerre_product(k, zeta) * std::exp(-0.25 * r2);
}

std::vector<double> geometric_grid(double lo, double hi, int count) {
  if (count < 2 || !(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("geometric_grid: bad range");
  std::vector<double> g(count);
  const double r = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) g[i] = lo * std::exp(r * i);
  g.back() = hi;
  return g;
}

}  // namespace huaharm
