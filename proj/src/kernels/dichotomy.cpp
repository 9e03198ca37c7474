#include <cmath>
#include <sstream>

#include "huaharm/kernels.hpp"

namespace huaharm {

const char* verdict_name(Verdict v) { return v == Verdict::Regular ? "regular" : "blow-up"; }

namespace {

// Real signal along the phase of the smallest-a sample.
RVec project(const std::vector<cplx>& v) {
  cplx u = 0.0;
  for (const auto& x : v)
    if (std::abs(x) > 0.0) {
      u = x / std::abs(x);
      break;
    }
  RVec d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d[i] = (v[i] * std::conj(u)).real();
  return d;
}

OrderSummary classify(const ProbeFn& probe, int p, const ProbeConfig& cfg, ExponentFit* fit_out, bool* failed) {
  OrderSummary o;
  o.p = p;
  auto grid = geometric_grid(cfg.fit_lo, cfg.fit_hi, 16);
  std::vector<cplx> vals(grid.size());
  double peak = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    vals[i] = probe(p, grid[i]);
    peak = std::max(peak, std::abs(vals[i]));
  }
  if (peak == 0.0) {
    o.zero_signal = true;
    return o;
  }
  RVec d = project(vals);
  ExponentFit f;
  try {
    f = fit_exponent(grid, d);
  } catch (const FitFailure&) {
    if (failed) *failed = true;
    return o;
  }
  if (fit_out) *fit_out = f;
  o.exponent = f.exponent;
  o.log_flag = f.log_flag;
  o.residual = f.log_flag ? f.log_residual : f.power_residual;
  const double a0 = grid.front(), d0 = std::abs(d.front());
  if (f.log_flag) {
    o.bounded = !(f.log_residual < cfg.residual_cut && std::abs(f.leading_coeff * std::log(a0)) >= cfg.dominance * d0);
  } else {
    o.bounded = !(f.exponent < cfg.exponent_cut && f.power_residual < cfg.residual_cut &&
                  std::abs(f.leading_coeff * std::pow(a0, f.exponent)) >= cfg.dominance * d0);
  }
  return o;
}

}  // namespace

DichotomyReport run_dichotomy(const ProbeFn& probe, int k, double expected, const ProbeConfig& cfg) {
  DichotomyReport r;
  r.k = k;
  r.p = k + 1;
  r.expected_exponent = expected;
  r.a_samples = geometric_grid(cfg.a_lo, cfg.a_hi, cfg.samples);
  for (double a : r.a_samples) r.values.push_back(probe(r.p, a));
  bool any_unbounded = false;
  for (int p = 0; p <= k + 1; ++p) {
    ExponentFit f;
    bool failed = false;
    OrderSummary o = classify(probe, p, cfg, &f, &failed);
    if (p == k + 1) {
      r.fit_failed = failed;
      r.fitted_exponent = f.exponent;
      r.fit_residual = f.power_residual;
      r.log_residual = f.log_residual;
      r.log_flag = f.log_flag;
      if (o.zero_signal) r.note = "probe of order k+1 vanishes identically";
      else if (failed) r.note = "no power or logarithmic model fits the order k+1 probe";
    }
    any_unbounded = any_unbounded || !o.bounded;
    r.orders.push_back(o);
  }
  r.verdict = any_unbounded ? Verdict::BlowUp : Verdict::Regular;
  return r;
}

DichotomyReport dichotomy_cn(const TrigBoundaryData& f, double alpha, const PhiHat& phi_hat, const ProbeConfig& cfg) {
  const double beta = alpha * f.n;
  const int k = singular_index(beta);
  return run_dichotomy([&](int p, double a) { return I_p_probe(f, alpha, phi_hat, p, a); }, k, beta - k, cfg);
}

DichotomyReport dichotomy_heis(const std::vector<HAtom>& f, double alpha, int n,
                               const std::function<double(double)>& psi, int kappa, const ProbeConfig& cfg) {
  const double gamma = alpha * n;
  const int k = singular_index(gamma);
  return run_dichotomy([&](int p, double a) { return heis_I_probe(f, alpha, n, psi, kappa, p, a); }, k, gamma - k,
                       cfg);
}

}  // namespace huaharm
