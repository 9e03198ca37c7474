#include <cmath>
#include <sstream>
#include <stdexcept>

#include "huaharm/kernels.hpp"
#include "huaharm/parallel.hpp"

namespace huaharm {

double p_kernel_constant(int n) { return std::pow(2.0, n - 1) / std::pow(M_PI, n + 1); }

namespace {

int kappa_budget(const HKernelSpec& s, double x) {
  const double L = std::log(1.0 / s.kappa_tol);
  const double k = L * L / (8.0 * s.alpha * x) + 30.0;
  return static_cast<int>(std::min(k, 2e9));
}

bool chained(double alpha) {
  const double m = 1.0 / alpha, r = std::round(m);
  return r >= 1.0 && r <= 64.0 && std::abs(m - r) < 1e-12;
}

}  // namespace

PKernel::PKernel(const HKernelSpec& spec, double a) : spec_(spec), a_(a) {
  if (!(a > 0.0)) throw std::domain_error("p_kernel: a must be positive");
  if (!(spec.alpha > 0.0)) throw std::invalid_argument("p_kernel: alpha must be positive");
  if (spec.n < 1) throw std::invalid_argument("p_kernel: n must be at least 1");
  lambda_min_ = spec.lambda_min;
  const double lmax = spec.lambda_max_scaled / a;
  if (!(lmax > lambda_min_)) throw std::invalid_argument("p_kernel: empty lambda range");
  const auto& gl = cached_legendre(spec.per_panel);
  const double ratio = std::pow(lmax / lambda_min_, 1.0 / spec.panels);
  double lo = lambda_min_;
  edges_.push_back(lo);
  for (int p = 0; p < spec.panels; ++p) {
    const double hi = lo * ratio;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      lambda_.push_back(0.5 * (lo + hi) + 0.5 * (hi - lo) * gl.nodes[i]);
      weight_.push_back(0.5 * (hi - lo) * gl.weights[i]);
    }
    lo = hi;
    edges_.push_back(hi);
  }
  const int cap = chained(spec.alpha) ? spec.kappa_cap : spec.kappa_cap_direct;
  std::vector<double> all(lambda_.begin(), lambda_.end());
  all.push_back(lambda_min_);
  std::vector<RVec> g(all.size());
  std::vector<char> capped(all.size(), 0), heavy(all.size(), 0);
  parallel_for(all.size(), [&](std::size_t i) {
    const double x = all[i] * a;
    int K = kappa_budget(spec, x);
    if (K > cap) {
      K = cap;
      capped[i] = 1;
    }
    g[i] = g_radial_all(spec.alpha, spec.n, K, x);
    if (capped[i] && g[i].size() > 1) {
      double sum = 0.0;
      for (double v : g[i]) sum += std::abs(v);
      // geometric estimate of the neglected tail
      const double r = std::abs(g[i].back() / g[i][g[i].size() - 2]);
      const double tail = r < 1.0 ? std::abs(g[i].back()) * r / (1.0 - r) : 1e300;
      if (tail > 0.01 * sum) heavy[i] = 1;
    }
  });
  g_min_ = std::move(g.back());
  g.pop_back();
  g_ = std::move(g);
  int ncapped = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    ncapped += capped[i];
    if (heavy[i]) truncation_ok_ = false;
  }
  for (const auto& v : g_) kappa_max_ = std::max<int>(kappa_max_, static_cast<int>(v.size()) - 1);
  if (ncapped) {
    std::ostringstream os;
    os << "kappa series capped at " << cap << " on " << ncapped << " lambda nodes";
    if (!truncation_ok_) os << "; the neglected tail exceeds 1% of the retained head";
    warning_ = os.str();
  }
}

namespace {
double node_value(const RVec& g, double lambda, int n, const HPoint& w) {
  const double s = 2.0 * lambda * norm2(w.zeta);
  auto ell = laguerre_damped(static_cast<int>(g.size()) - 1, n - 1.0, s);
  double acc = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) acc += g[k] * ell[k];
  return 2.0 * std::cos(lambda * w.t) * std::pow(lambda, n) * acc;
}
}  // namespace

double PKernel::node_contribution(std::size_t i, const HPoint& w) const {
  return weight_[i] * node_value(g_[i], lambda_[i], spec_.n, w);
}

double PKernel::operator()(const HPoint& w) const {
  if (static_cast<int>(w.dim()) != spec_.n) throw std::invalid_argument("p_kernel: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < lambda_.size(); ++i) s += node_contribution(i, w);
  // the integrand is flat on (0, lambda_min)
  s += lambda_min_ * node_value(g_min_, lambda_min_, spec_.n, w);
  return p_kernel_constant(spec_.n) * s;
}

namespace {
// int_0^V e^{-v/2} L_kappa(v) dv for kappa = 0..K
RVec disc_integrals(int K, double V) {
  auto ld = laguerre_damped(K, 0.0, V);
  RVec J(K + 1);
  J[0] = 2.0 * (1.0 - std::exp(-0.5 * V));
  for (int k = 1; k <= K; ++k) J[k] = -J[k - 1] - 2.0 * (ld[k] - ld[k - 1]);
  return J;
}

double box_value(const RVec& g, double lambda, double T, double R) {
  auto J = disc_integrals(static_cast<int>(g.size()) - 1, 2.0 * lambda * R * R);
  double acc = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) acc += g[k] * J[k];
  // lambda^n with n = 1, the t integral of 2 cos, and the radial Jacobian pi / (2 lambda)
  return lambda * (4.0 * std::sin(lambda * T) / lambda) * (M_PI / (2.0 * lambda)) * acc;
}
}  // namespace

double PKernel::box_mass(double T, double R) const {
  if (spec_.n != 1) throw std::invalid_argument("box_mass: only n = 1 is supported");
  if (!(T > 0.0) || !(R > 0.0)) throw std::invalid_argument("box_mass: T and R must be positive");
  const auto& gl = cached_legendre(spec_.per_panel);
  const int cap = chained(spec_.alpha) ? spec_.kappa_cap : spec_.kappa_cap_direct;
  const std::size_t per = gl.nodes.size();
  std::vector<double> part(edges_.size() - 1, 0.0);
  parallel_for(part.size(), [&](std::size_t p) {
    const double lo = edges_[p], hi = edges_[p + 1];
    // sin(lambda T) needs a few nodes per period
    const int sub = std::max(1, static_cast<int>(std::ceil((hi - lo) * T / (2.0 * M_PI))));
    double acc = 0.0;
    if (sub == 1) {
      for (std::size_t i = 0; i < per; ++i) acc += weight_[p * per + i] * box_value(g_[p * per + i], lambda_[p * per + i], T, R);
    } else {
      const double w = (hi - lo) / sub;
      for (int q = 0; q < sub; ++q) {
        const double a0 = lo + q * w;
        for (std::size_t i = 0; i < per; ++i) {
          const double l = a0 + 0.5 * w * (1.0 + gl.nodes[i]);
          const double x = l * a_;
          const int K = std::min(kappa_budget(spec_, x), cap);
          acc += 0.5 * w * gl.weights[i] * box_value(g_radial_all(spec_.alpha, spec_.n, K, x), l, T, R);
        }
      }
    }
    part[p] = acc;
  });
  double s = 0.0;
  for (double v : part) s += v;
  s += lambda_min_ * box_value(g_min_, lambda_min_, T, R);
  return p_kernel_constant(1) * s;
}

double p_kernel(const HKernelSpec& spec, const HPoint& w, double a) { return PKernel(spec, a)(w); }

}  // namespace huaharm
