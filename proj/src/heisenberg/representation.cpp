#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "huaharm/heisenberg.hpp"

namespace huaharm {

namespace {

const cplx I(0.0, 1.0);

// h_k(y) e^{y^2/2}, k = 0..kmax
std::vector<double> hermite_poly_all(int kmax, double y) {
  std::vector<double> q(kmax + 1);
  double prev = 0.0, cur = std::pow(M_PI, -0.25);
  q[0] = cur;
  for (int k = 0; k < kmax; ++k) {
    double next = std::sqrt(2.0 / (k + 1)) * y * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
    q[k + 1] = cur;
  }
  return q;
}

void enumerate_shell(std::size_t n, int kappa, MultiIdx& cur, std::size_t pos,
                     const std::function<void(const MultiIdx&)>& visit) {
  if (pos + 1 == n) {
    cur[pos] = kappa;
    visit(cur);
    return;
  }
  for (int i = 0; i <= kappa; ++i) {
    cur[pos] = i;
    enumerate_shell(n, kappa - i, cur, pos + 1, visit);
  }
}

cplx rep_coeff_classical(double lam, const MultiIdx& k, const MultiIdx& j, const HPoint& w, int nodes) {
  const std::size_t n = w.dim();
  if (k.size() != n || j.size() != n) throw std::invalid_argument("rep_coeff: dimension mismatch");
  check_guard(k);
  check_guard(j);
  const double c = std::sqrt(2.0 * M_PI * std::abs(lam));
  const double sg = lam > 0 ? 1.0 : -1.0;
  const QuadratureRule& gh = cached_hermite(nodes);
  cplx prod = 1.0;
  double uv = 0.0;
  for (std::size_t d = 0; d < n; ++d) {
    const double u = w.zeta[d].real(), v = w.zeta[d].imag();
    uv += u * v;
    cplx s = 0.0;
    for (std::size_t i = 0; i < gh.nodes.size(); ++i) {
      const double z = gh.nodes[i];
      const double qa = hermite_poly_all(k[d], z + 0.5 * c * v)[k[d]];
      const double qb = hermite_poly_all(j[d], z - 0.5 * c * v)[j[d]];
      s += gh.weights[i] * qa * qb * std::exp(I * (sg * c * u * (z - 0.5 * c * v)));
    }
    prod *= s * std::exp(-0.25 * c * c * v * v);
  }
  return prod * std::exp(I * (2.0 * M_PI * lam * (0.5 * uv + 0.25 * w.t)));
}

// Laguerre form of the diagonal coefficients in the classical scaling, all kappa at once
std::vector<double> diag_shell_classical(double lam, const CVec& zeta, int K) {
  const double c2 = 2.0 * M_PI * std::abs(lam);
  std::vector<double> s(zeta.size());
  double r2 = 0.0;
  for (std::size_t d = 0; d < zeta.size(); ++d) {
    s[d] = 0.5 * c2 * std::norm(zeta[d]);
    r2 += std::norm(zeta[d]);
  }
  auto sums = laguerre_shell_sums(s, K);
  const double g = std::exp(-0.25 * c2 * r2);
  for (auto& v : sums) v *= g;
  return sums;
}

std::mutex g_verify_mutex;
std::map<std::size_t, bool> g_verified;

// The closed form is trusted only after it reproduces the quadrature path.
void ensure_fast_path(std::size_t n) {
  std::lock_guard<std::mutex> lock(g_verify_mutex);
  if (g_verified.count(n)) return;
  double worst = 0.0;
  for (double lam : {0.7, -1.3}) {
    HPoint w = hn_identity(n);
    for (std::size_t d = 0; d < n; ++d) w.zeta[d] = cplx(0.3 + 0.1 * d, -0.45 + 0.2 * d);
    w.t = 0.8;
    for (int kappa = 0; kappa <= 3; ++kappa) {
      MultiIdx cur(n);
      enumerate_shell(n, kappa, cur, 0, [&](const MultiIdx& k) {
        cplx q = rep_coeff_classical(lam, k, k, w, 64);
        std::vector<double> s(n);
        double r2 = 0.0, c2 = 2.0 * M_PI * std::abs(lam);
        double lp = 1.0;
        for (std::size_t d = 0; d < n; ++d) {
          s[d] = 0.5 * c2 * std::norm(w.zeta[d]);
          r2 += std::norm(w.zeta[d]);
          lp *= laguerre(k[d], s[d]);
        }
        cplx f = lp * std::exp(-0.25 * c2 * r2) * std::exp(I * (0.5 * M_PI * lam * w.t));
        worst = std::max(worst, std::abs(q - f));
      });
    }
  }
  if (worst > 1e-6) throw std::runtime_error("rep_coeff: Laguerre closed form disagrees with quadrature");
  g_verified[n] = true;
}

}  // namespace

double classical_lambda(double lambda, RepConvention conv) {
  if (lambda == 0.0) throw std::invalid_argument("representation: lambda must be nonzero");
  return conv == RepConvention::Classical ? lambda : 2.0 * lambda / M_PI;
}

cplx rep_coeff(double lambda, const MultiIdx& k, const MultiIdx& j, const HPoint& w, RepConvention conv,
               int nodes) {
  return rep_coeff_classical(classical_lambda(lambda, conv), k, j, w, nodes);
}

std::vector<double> laguerre_shell_sums(const std::vector<double>& s, int K) {
  std::vector<double> acc(K + 1, 0.0);
  acc[0] = 1.0;
  for (double sd : s) {
    auto L = laguerre_all(K, 0.0, sd);
    std::vector<double> nxt(K + 1, 0.0);
    for (int m = 0; m <= K; ++m)
      for (int i = 0; i <= m; ++i) nxt[m] += acc[m - i] * L[i];
    acc.swap(nxt);
  }
  return acc;
}

std::vector<double> ell_kappa_all(double lambda, const CVec& zeta, int K) {
  if (lambda == 0.0) throw std::invalid_argument("ell_kappa: lambda must be nonzero");
  // the shell sum collapses to L^{(n-1)}_kappa of the total argument
  const double s = 2.0 * std::abs(lambda) * norm2(zeta);
  return laguerre_damped(K, static_cast<double>(zeta.size()) - 1.0, s);
}

cplx rep_coeff_diag_fast(double lambda, const MultiIdx& k, const HPoint& w, RepConvention conv) {
  const double lam = classical_lambda(lambda, conv);
  if (k.size() != w.dim()) throw std::invalid_argument("rep_coeff: dimension mismatch");
  check_guard(k);
  ensure_fast_path(w.dim());
  const double c = std::sqrt(2.0 * M_PI * std::abs(lam));
  CVec cz(w.zeta);
  for (auto& v : cz) v *= c;
  const double n = static_cast<double>(w.dim());
  return std::pow(2.0 * M_PI, 0.5 * n) * phi_k(k, cz) * std::exp(I * (0.5 * M_PI * lam * w.t));
}

cplx e_kappa_lambda(double lambda, int kappa, const HPoint& w, RepConvention conv) {
  if (kappa < 0 || kappa > kIndexGuard) throw std::out_of_range("e_kappa_lambda: kappa outside guard");
  const double lam = classical_lambda(lambda, conv);
  ensure_fast_path(w.dim());
  auto sums = diag_shell_classical(lam, w.zeta, kappa);
  return sums[kappa] * std::exp(I * (0.5 * M_PI * lam * w.t));
}

cplx e_kappa_lambda_quadrature(double lambda, int kappa, const HPoint& w, RepConvention conv) {
  if (kappa < 0 || kappa > kIndexGuard) throw std::out_of_range("e_kappa_lambda: kappa outside guard");
  const double lam = classical_lambda(lambda, conv);
  cplx s = 0.0;
  MultiIdx cur(w.dim());
  enumerate_shell(w.dim(), kappa, cur, 0, [&](const MultiIdx& k) { s += rep_coeff_classical(lam, k, k, w, 64); });
  return s;
}

LambdaProfile smooth_bump(double lo, double hi, double height) {
  if (!(hi > lo)) throw std::invalid_argument("smooth_bump: empty support");
  LambdaProfile p;
  p.lo = lo;
  p.hi = hi;
  p.f = [lo, hi, height](double x) {
    double u = (2.0 * x - lo - hi) / (hi - lo);
    if (std::abs(u) >= 1.0) return 0.0;
    return height * std::exp(1.0 - 1.0 / (1.0 - u * u));
  };
  return p;
}

namespace {
void check_profile(const LambdaProfile& psi) {
  if (!psi.f) throw std::invalid_argument("lambda profile: missing callable");
  if (!(psi.hi > psi.lo)) throw std::invalid_argument("lambda profile: empty support");
  if (psi.lo <= 0.0 && psi.hi >= 0.0) throw std::domain_error("lambda profile: support touches 0");
}

template <class F>
void for_lambda_nodes(const LambdaProfile& psi, int panels, int per, F&& visit) {
  const QuadratureRule& gl = cached_legendre(per);
  const double w = (psi.hi - psi.lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = psi.lo + p * w, mid = a + 0.5 * w;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) visit(mid + 0.5 * w * gl.nodes[i], 0.5 * w * gl.weights[i]);
  }
}
}  // namespace

cplx e_kappa_psi(int kappa, const LambdaProfile& psi, const HPoint& w, int panels, int per_panel,
                 RepConvention conv) {
  check_profile(psi);
  cplx s = 0.0;
  for_lambda_nodes(psi, panels, per_panel, [&](double lam, double wt) {
    double v = psi.f(lam);
    if (v != 0.0) s += wt * v * e_kappa_lambda(lam, kappa, w, conv);
  });
  return s;
}

std::vector<cplx> inversion_terms(const PartialFT& F3f, const LambdaProfile& psi, int K, const HPoint& w,
                                  const InversionOptions& opt) {
  check_profile(psi);
  const std::size_t n = w.dim();
  const QuadratureRule& gh = cached_hermite(opt.gh_nodes);
  const std::size_t m = gh.nodes.size();
  std::size_t total = 1;
  for (std::size_t d = 0; d < 2 * n; ++d) total *= m;
  std::vector<cplx> terms(K + 1, 0.0);
  const double jac = std::pow(opt.width, 2.0 * n);
  for_lambda_nodes(psi, opt.panels, opt.per_panel, [&](double lam, double wt) {
    const double pv = psi.f(lam);
    if (pv == 0.0) return;
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t r = idx;
      CVec xi(n), eta(n);
      double W = 1.0, x2 = 0.0;
      for (std::size_t d = 0; d < n; ++d) {
        std::size_t a = r % m;
        r /= m;
        std::size_t b = r % m;
        r /= m;
        W *= gh.weights[a] * gh.weights[b];
        x2 += gh.nodes[a] * gh.nodes[a] + gh.nodes[b] * gh.nodes[b];
        xi[d] = opt.width * cplx(gh.nodes[a], gh.nodes[b]);
        eta[d] = w.zeta[d] + xi[d];
      }
      const cplx phase = std::exp(I * (lam * (w.t + 2.0 * hdot(w.zeta, eta).imag())));
      const cplx base = wt * pv * W * jac * std::exp(x2) * phase * F3f(xi, lam);
      auto ell = ell_kappa_all(lam, eta, K);
      for (int kap = 0; kap <= K; ++kap) terms[kap] += base * ell[kap];
    }
  });
  return terms;
}

cplx inversion_target(const PartialFT& F3f, const LambdaProfile& psi, const HPoint& w, const InversionOptions& opt) {
  check_profile(psi);
  const double n = static_cast<double>(w.dim());
  cplx s = 0.0;
  for_lambda_nodes(psi, opt.panels, opt.per_panel, [&](double lam, double wt) {
    const double pv = psi.f(lam);
    if (pv == 0.0) return;
    s += wt * pv * std::pow(std::abs(lam), -n) * F3f(w.zeta, lam) * std::exp(I * (lam * w.t));
  });
  return std::pow(0.5 * M_PI, n) * s;
}

}  // namespace huaharm
