#include "huaharm/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace huaharm {

namespace {

// Golub-Welsch on the Jacobi matrix, then Newton on the orthonormal
// recurrence; weights from the Christoffel sum, which keeps tail weights
// relatively accurate where eigenvector entries would underflow.
QuadratureRule golub_welsch(RuleKind kind, double alpha, const std::vector<double>& diag,
                            const std::vector<double>& off, double mu0) {
  const int m = static_cast<int>(diag.size());
  Eigen::VectorXd d(m), e(m > 1 ? m - 1 : 1);
  for (int i = 0; i < m; ++i) d[i] = diag[i];
  for (int i = 0; i + 1 < m; ++i) e[i] = off[i + 1];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(d, e.head(std::max(m - 1, 0)), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("golub_welsch: eigensolver failed");

  // off[k] = b_k couples p_{k-1} and p_k; off has size m+1 so b_m is available.
  auto eval = [&](double x, double& pm, double& dpm, double& sumsq) {
    double p0 = 1.0 / std::sqrt(mu0), dp0 = 0.0;
    double p1 = 0.0, dp1 = 0.0;
    sumsq = p0 * p0;
    double pkm1 = 0.0, dpkm1 = 0.0, pk = p0, dpk = dp0;
    for (int k = 0; k < m; ++k) {
      p1 = ((x - diag[k]) * pk - off[k] * pkm1) / off[k + 1];
      dp1 = (pk + (x - diag[k]) * dpk - off[k] * dpkm1) / off[k + 1];
      pkm1 = pk;
      dpkm1 = dpk;
      pk = p1;
      dpk = dp1;
      if (k + 1 < m) sumsq += pk * pk;
    }
    pm = pk;
    dpm = dpk;
  };

  QuadratureRule rule;
  rule.kind = kind;
  rule.alpha = alpha;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  for (int i = 0; i < m; ++i) {
    double x = es.eigenvalues()[i];
    double pm, dpm, s;
    for (int it = 0; it < 6; ++it) {
      eval(x, pm, dpm, s);
      if (dpm == 0.0) break;
      double dx = pm / dpm;
      x -= dx;
      if (std::abs(dx) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    eval(x, pm, dpm, s);
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / s;
  }
  return rule;
}

}  // namespace

double QuadratureRule::apply(const std::function<double(double)>& f) const {
  double s = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
  return s;
}

QuadratureRule gauss_hermite(int m) {
  if (m < 1) throw std::invalid_argument("gauss_hermite: m must be positive");
  std::vector<double> a(m, 0.0), b(m + 1, 0.0);
  for (int k = 1; k <= m; ++k) b[k] = std::sqrt(0.5 * k);
  auto r = golub_welsch(RuleKind::GaussHermite, 0.0, a, b, std::sqrt(M_PI));
  // exact symmetry
  for (int i = 0; i < m / 2; ++i) {
    double x = 0.5 * (r.nodes[m - 1 - i] - r.nodes[i]);
    double w = 0.5 * (r.weights[m - 1 - i] + r.weights[i]);
    r.nodes[i] = -x;
    r.nodes[m - 1 - i] = x;
    r.weights[i] = r.weights[m - 1 - i] = w;
  }
  if (m % 2 == 1) r.nodes[m / 2] = 0.0;
  return r;
}

QuadratureRule gauss_laguerre(int m, double alpha) {
  if (m < 1) throw std::invalid_argument("gauss_laguerre: m must be positive");
  if (!(alpha > -1.0)) throw std::invalid_argument("gauss_laguerre: alpha must exceed -1");
  std::vector<double> a(m), b(m + 1, 0.0);
  for (int k = 0; k < m; ++k) a[k] = 2.0 * k + alpha + 1.0;
  for (int k = 1; k <= m; ++k) b[k] = std::sqrt(k * (k + alpha));
  return golub_welsch(RuleKind::GaussLaguerre, alpha, a, b, std::tgamma(alpha + 1.0));
}

QuadratureRule gauss_legendre(int m) {
  if (m < 1) throw std::invalid_argument("gauss_legendre: m must be positive");
  std::vector<double> a(m, 0.0), b(m + 1, 0.0);
  for (int k = 1; k <= m; ++k) b[k] = k / std::sqrt(4.0 * k * k - 1.0);
  auto r = golub_welsch(RuleKind::GaussLegendre, 0.0, a, b, 2.0);
  for (int i = 0; i < m / 2; ++i) {
    double x = 0.5 * (r.nodes[m - 1 - i] - r.nodes[i]);
    double w = 0.5 * (r.weights[m - 1 - i] + r.weights[i]);
    r.nodes[i] = -x;
    r.nodes[m - 1 - i] = x;
    r.weights[i] = r.weights[m - 1 - i] = w;
  }
  if (m % 2 == 1) r.nodes[m / 2] = 0.0;
  return r;
}

namespace {
std::mutex g_cache_mutex;
std::map<std::tuple<int, int, double>, QuadratureRule> g_cache;

const QuadratureRule& cached(int kind, int m, double alpha) {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto key = std::make_tuple(kind, m, alpha);
  auto it = g_cache.find(key);
  if (it != g_cache.end()) return it->second;
  QuadratureRule r = kind == 0 ? gauss_hermite(m) : kind == 1 ? gauss_legendre(m) : gauss_laguerre(m, alpha);
  return g_cache.emplace(key, std::move(r)).first->second;
}
}  // namespace

const QuadratureRule& cached_hermite(int m) { return cached(0, m, 0.0); }
const QuadratureRule& cached_legendre(int m) { return cached(1, m, 0.0); }
const QuadratureRule& cached_laguerre(int m, double alpha) { return cached(2, m, alpha); }

namespace {

const double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                        0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
const double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

void gk15(const std::function<double(double)>& f, double a, double b, double& res, double& err) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  double rk = fc * kWgk[7], rg = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    double dx = h * kXgk[j];
    double f1 = f(c - dx), f2 = f(c + dx);
    rk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) rg += kWg[j / 2] * (f1 + f2);
  }
  res = rk * h;
  err = std::abs((rk - rg) * h);
}

}  // namespace

double integrate_gk(const std::function<double(double)>& f, double a, double b, const AdaptiveOptions& opt,
                    double* err_out) {
  if (a == b) {
    if (err_out) *err_out = 0.0;
    return 0.0;
  }
  struct Seg {
    double a, b, v, e;
    int depth;
    bool operator<(const Seg& o) const { return e < o.e; }
  };
  std::priority_queue<Seg> heap;
  double v, e;
  gk15(f, a, b, v, e);
  heap.push({a, b, v, e, 0});
  double total = v, toterr = e;
  int count = 1;
  while (true) {
    double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
    if (toterr <= tol || count >= opt.max_intervals) break;
    Seg s = heap.top();
    if (s.depth >= opt.max_depth || s.e == 0.0) break;
    heap.pop();
    double m = 0.5 * (s.a + s.b);
    double v1, e1, v2, e2;
    gk15(f, s.a, m, v1, e1);
    gk15(f, m, s.b, v2, e2);
    heap.push({s.a, m, v1, e1, s.depth + 1});
    heap.push({m, s.b, v2, e2, s.depth + 1});
    ++count;
    total += v1 + v2 - s.v;
    toterr += e1 + e2 - s.e;
  }
  // re-sum to shed accumulated cancellation
  total = 0.0;
  toterr = 0.0;
  while (!heap.empty()) {
    total += heap.top().v;
    toterr += heap.top().e;
    heap.pop();
  }
  if (err_out) *err_out = toterr;
  return total;
}

double integrate_halfline(const std::function<double(double)>& f, double a, const AdaptiveOptions& opt,
                          double* err) {
  auto g = [&](double s) {
    if (s >= 1.0) return 0.0;
    double om = 1.0 - s;
    double x = a + s / om;
    double v = f(x);
    return v == 0.0 ? 0.0 : v / (om * om);
  };
  return integrate_gk(g, 0.0, 1.0, opt, err);
}

}  // namespace huaharm
