#include <cmath>
#include <stdexcept>

#include "huaharm/kernels.hpp"

namespace huaharm {

double g_radial(double alpha, int n, int kappa, double x) { return g_radial_derivative(alpha, n, kappa, 0, x); }

double g_radial_derivative(double alpha, int n, int kappa, int p, double x) {
  if (!(alpha > 0.0)) throw std::invalid_argument("g_radial: alpha must be positive");
  if (kappa < 0) throw std::invalid_argument("g_radial: kappa must be non-negative");
  return BoundedHyperSolution(alpha * n, 2.0 * alpha * kappa).derivative(p, x);
}

namespace {

// 1/alpha when it is a small integer, 0 otherwise
int chain_step(double alpha) {
  const double m = 1.0 / alpha;
  const double r = std::round(m);
  if (r >= 1.0 && r <= 64.0 && std::abs(m - r) < 1e-12) return static_cast<int>(r);
  return 0;
}

}  // namespace

// With gh(A) = e^x g at A = alpha kappa, b = -alpha n, z = 2x:
// (A - b) gh(A-1) - (2A + z - b) gh(A) + A gh(A+1) = 0.
// gh is the minimal solution, so ratios are computed downward from far above K.
RVec g_radial_all(double alpha, int n, int K, double x) {
  if (!(alpha > 0.0)) throw std::invalid_argument("g_radial_all: alpha must be positive");
  if (K < 0) throw std::invalid_argument("g_radial_all: K must be non-negative");
  if (!(x > 0.0)) throw std::domain_error("g_radial_all: x must be positive");
  RVec out(K + 1);
  const int m = chain_step(alpha);
  if (m == 0) {
    for (int k = 0; k <= K; ++k) out[k] = g_radial(alpha, n, k, x);
    return out;
  }
  const double b = -alpha * n, z = 2.0 * x, ex = std::exp(-x);
  for (int r = 0; r < m && r <= K; ++r) {
    const double start = r == 0 ? ex : g_radial(alpha, n, r, x);
    out[r] = start;
    const int jmax = (K - r) / m;
    if (jmax == 0) continue;
    // far enough above K that the dominant solution is damped by about e^{-35}
    const double root = std::sqrt(alpha * r + jmax) + 8.75 / std::sqrt(z);
    const int top = static_cast<int>(std::min(4e8, std::max(2.0 * jmax + 60.0, root * root - alpha * r + 60.0)));
    RVec rho(jmax + 1, 0.0);
    double next = 0.0;
    for (int j = top; j >= 1; --j) {
      const double A = alpha * r + j;
      const double cur = (A - b) / ((2.0 * A + z - b) - A * next);
      if (j <= jmax) rho[j] = cur;
      next = cur;
    }
    double v = start;
    for (int j = 1; j <= jmax; ++j) {
      v *= rho[j];
      out[r + j * m] = v;
    }
  }
  return out;
}

cplx p_kernel_term(double alpha, double lambda, int kappa, const HPoint& w, double a) {
  if (!(a > 0.0)) throw std::domain_error("p_kernel_term: a must be positive");
  const int n = static_cast<int>(w.dim());
  return e_kappa_lambda(lambda, kappa, hn_inv(w)) * g_radial(alpha, n, kappa, std::abs(lambda) * a);
}

cplx heis_I_probe(const std::vector<HAtom>& f, double alpha, int n, const std::function<double(double)>& psi, int kappa,
                  int p, double a) {
  if (p < 0) throw std::invalid_argument("heis_I_probe: order must be non-negative");
  if (a < 0.0) throw std::domain_error("heis_I_probe: a must be non-negative");
  BoundedHyperSolution g(alpha * n, 2.0 * alpha * kappa);
  cplx s = 0.0;
  for (const auto& at : f) {
    if (at.kappa != kappa || at.lambda == 0.0) continue;
    const double l = std::abs(at.lambda);
    s += at.b * psi(at.lambda) * std::pow(l, p) * g.derivative(p, l * a);
  }
  return s;
}

namespace {
double psi_exponent(int n, double alpha, int p) {
  if (p < 0) throw std::invalid_argument("psi_p: order must be non-negative");
  const int k = singular_index(n * alpha);
  if (p > k) throw std::out_of_range("psi_p: order exceeds k");
  const double e = n * alpha - p + 1.0;
  if (std::abs(e) < 1e-12) throw std::domain_error("psi_p: exponent n alpha - p + 1 vanishes");
  return e;
}
}  // namespace

double psi_p_ode(int n, double alpha, int p, const std::function<double(double)>& g_p, double lambda_const, double a) {
  const double e = psi_exponent(n, alpha, p);
  if (!(a > 0.0)) throw std::domain_error("psi_p: a must be positive");
  auto f = [&](double t) { return g_p(t) * std::pow(t, -e - 1.0); };
  double integral = 0.0;
  if (a != 1.0) {
    const double lo = std::min(a, 1.0), hi = std::max(a, 1.0);
    AdaptiveOptions opt;
    opt.abs_tol = 0.0;
    opt.rel_tol = 1e-12;
    // geometric panels keep the t^{-e-1} factor resolved near small a
    double s = 0.0, x0 = lo;
    while (x0 < hi) {
      double x1 = std::min(hi, x0 * 10.0);
      s += integrate_gk(f, x0, x1, opt);
      x0 = x1;
    }
    integral = a < 1.0 ? -s : s;
  }
  return std::pow(a, e) * (lambda_const + integral);
}

double psi_p_residual(int n, double alpha, int p, const std::function<double(double)>& g_p, double lambda_const,
                      double a) {
  auto psi = [&](double s) { return cplx(psi_p_ode(n, alpha, p, g_p, lambda_const, a + s), 0.0); };
  FdSpec fd{1e-2 * a, 2};
  const double d = richardson(psi, 1, fd).real();
  return a * d + (p - 1.0 - n * alpha) * psi(0.0).real() - g_p(a);
}

}  // namespace huaharm
