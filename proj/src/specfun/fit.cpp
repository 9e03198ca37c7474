#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "huaharm/specfun.hpp"

namespace huaharm {

namespace {

struct LsqResult {
  double residual;
  double c1;
};

// Relative RMS residual of a linear least-squares fit with column equilibration.
LsqResult lsq(const Eigen::MatrixXd& A, const Eigen::VectorXd& d) {
  Eigen::VectorXd scale = A.colwise().norm().transpose();
  for (int j = 0; j < scale.size(); ++j)
    if (scale[j] == 0.0) scale[j] = 1.0;
  Eigen::MatrixXd As = A * scale.cwiseInverse().asDiagonal();
  Eigen::VectorXd c = As.colPivHouseholderQr().solve(d);
  double r = (As * c - d).norm() / d.norm();
  return {r, c[0] / scale[0]};
}

Eigen::MatrixXd power_design(const std::vector<double>& x, double e) {
  Eigen::MatrixXd A(x.size(), 4);
  for (std::size_t i = 0; i < x.size(); ++i) {
    double xe = std::pow(x[i], e);
    A(i, 0) = xe;
    A(i, 1) = xe * x[i];
    A(i, 2) = 1.0;
    A(i, 3) = x[i];
  }
  return A;
}

}  // namespace

ExponentFit fit_exponent(const std::vector<double>& x, const std::vector<double>& d, const FitOptions& opt) {
  if (x.size() != d.size() || x.size() < 5) throw std::invalid_argument("fit_exponent: need at least 5 samples");
  Eigen::VectorXd dv(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) dv[i] = d[i];
  if (dv.norm() == 0.0 || !std::isfinite(dv.norm())) throw FitFailure("fit_exponent: zero or non-finite signal");

  auto pres = [&](double e) { return lsq(power_design(x, e), dv).residual; };
  int best = 0;
  double bestr = 1e300;
  const int N = std::max(opt.scan_points, 3);
  std::vector<double> es(N);
  for (int i = 0; i < N; ++i) {
    es[i] = opt.e_lo + (opt.e_hi - opt.e_lo) * i / (N - 1);
    double r = pres(es[i]);
    if (r < bestr) {
      bestr = r;
      best = i;
    }
  }
  // golden section on the bracketing cell
  double lo = es[std::max(best - 1, 0)], hi = es[std::min(best + 1, N - 1)];
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
  double fa = pres(a), fb = pres(b);
  for (int it = 0; it < 100 && hi - lo > 1e-13; ++it) {
    if (fa < fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - g * (hi - lo);
      fa = pres(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + g * (hi - lo);
      fb = pres(b);
    }
  }
  double e = 0.5 * (lo + hi);
  LsqResult pw = lsq(power_design(x, e), dv);
  if (bestr < pw.residual) {
    e = es[best];
    pw = lsq(power_design(x, e), dv);
  }

  Eigen::MatrixXd L(x.size(), 4);
  for (std::size_t i = 0; i < x.size(); ++i) {
    double lx = std::log(x[i]);
    L(i, 0) = lx;
    L(i, 1) = x[i] * lx;
    L(i, 2) = 1.0;
    L(i, 3) = x[i];
  }
  LsqResult lg = lsq(L, dv);

  ExponentFit out;
  out.exponent = e;
  out.power_residual = pw.residual;
  out.log_residual = lg.residual;
  out.log_flag = lg.residual < pw.residual;
  out.leading_coeff = out.log_flag ? lg.c1 : pw.c1;
  if (std::min(pw.residual, lg.residual) > opt.fail_threshold)
    throw FitFailure("fit_exponent: neither power nor logarithmic model fits");
  return out;
}

namespace {
void check_grid(const std::vector<double>& s) {
  if (s.size() < 12) throw std::invalid_argument("asymptotic_exponent: need at least 12 samples");
  double lo = *std::min_element(s.begin(), s.end()), hi = *std::max_element(s.begin(), s.end());
  if (!(lo > 0.0) || hi > 0.5) throw std::invalid_argument("asymptotic_exponent: samples must lie in (0, 0.5]");
  if (hi / lo < 100.0 * (1.0 - 1e-12)) throw std::invalid_argument("asymptotic_exponent: grid must span two decades");
}

template <class Sol>
ExponentFit exponent_of(const Sol& sol, const std::vector<double>& s) {
  check_grid(s);
  std::vector<double> d(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) d[i] = sol.derivative(sol.k() + 1, s[i]);
  return fit_exponent(s, d);
}
}  // namespace

ExponentFit asymptotic_exponent(const BoundedHyperSolution& sol, const std::vector<double>& s) {
  return exponent_of(sol, s);
}
ExponentFit asymptotic_exponent(const BoundedLegendreSolution& sol, const std::vector<double>& s) {
  return exponent_of(sol, s);
}
ExponentFit asymptotic_exponent(const BoundedHyperSolution& sol) {
  return exponent_of(sol, geometric_grid(1e-4, 0.1, 16));
}
ExponentFit asymptotic_exponent(const BoundedLegendreSolution& sol) {
  return exponent_of(sol, geometric_grid(1e-4, 0.1, 16));
}

}  // namespace huaharm
