#include <cmath>
#include <stdexcept>

#include "huaharm/kernels.hpp"

namespace huaharm {

namespace {
const cplx I(0.0, 1.0);

void check_alpha(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
}
}  // namespace

double sqnorm(const RVec& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

RadialMultiplier::RadialMultiplier(double alpha, int n) : alpha_(alpha), n_(n) {
  check_alpha(alpha);
  if (n < 1) throw std::invalid_argument("dimension n must be at least 1");
  z_ = std::make_shared<BoundedLegendreSolution>(alpha * n);
}

double RadialMultiplier::value(double a, const RVec& xi) const { return derivative(0, a, xi); }

double RadialMultiplier::derivative(int p, double a, const RVec& xi) const {
  if (a < 0.0) throw std::domain_error("multiplier: a must be non-negative");
  if (xi.size() != static_cast<std::size_t>(2 * n_)) throw std::invalid_argument("multiplier: xi must lie in R^{2n}");
  const double s = alpha_ * sqnorm(xi);
  if (s == 0.0) return p == 0 ? 1.0 : 0.0;
  return std::pow(s, p) * z_->derivative(p, s * a);
}

double q_multiplier(double alpha, int n, double a, const RVec& xi) { return RadialMultiplier(alpha, n).value(a, xi); }

double TrigBoundaryData::bound() const {
  double s = 0.0;
  for (const auto& m : modes) s += std::abs(m.c);
  return s;
}

cplx TrigBoundaryData::operator()(const RVec& zeta) const {
  cplx s = 0.0;
  for (const auto& m : modes) {
    double ph = 0.0;
    for (std::size_t i = 0; i < zeta.size(); ++i) ph += m.xi[i] * zeta[i];
    s += m.c * std::exp(I * ph);
  }
  return s;
}

TrigBoundaryData TrigBoundaryData::constant(int n, cplx c) {
  TrigBoundaryData d;
  d.n = n;
  d.modes.push_back({RVec(2 * n, 0.0), c});
  return d;
}

TrigBoundaryData TrigBoundaryData::single_mode(const RVec& xi, cplx c) {
  if (xi.empty() || xi.size() % 2) throw std::invalid_argument("single_mode: xi must lie in R^{2n}");
  TrigBoundaryData d;
  d.n = static_cast<int>(xi.size() / 2);
  d.modes.push_back({xi, c});
  return d;
}

cplx extend_Cn(const TrigBoundaryData& f, double alpha, double a, const RVec& zeta) {
  if (!(a > 0.0)) throw std::domain_error("extend_Cn: a must be positive");
  if (zeta.size() != static_cast<std::size_t>(2 * f.n)) throw std::invalid_argument("extend_Cn: dimension mismatch");
  RadialMultiplier q(alpha, f.n);
  cplx s = 0.0;
  for (const auto& m : f.modes) {
    double ph = 0.0;
    for (std::size_t i = 0; i < zeta.size(); ++i) ph += m.xi[i] * zeta[i];
    s += m.c * q.value(a, m.xi) * std::exp(I * ph);
  }
  return s;
}

cplx op_Lambda_alpha(double alpha, int n, const CnFunc& F, const RVec& zeta, double a, const FdSpec& fd) {
  if (!(a > 0.0)) throw std::domain_error("Lambda_alpha: a must be positive");
  cplx lap = 0.0;
  for (std::size_t i = 0; i < zeta.size(); ++i) {
    lap += richardson(
        [&](double s) {
          RVec z = zeta;
          z[i] += s;
          return F(z, a);
        },
        2, fd);
  }
  FdSpec fa = fd;
  fa.h = fd.h * std::min(1.0, a);
  auto ga = [&](double s) { return F(zeta, a + s); };
  cplx d1 = richardson(ga, 1, fa), d2 = richardson(ga, 2, fa);
  return alpha * a * (lap - static_cast<double>(n) * d1) + a * a * d2;
}

PhiHat radial_bump(double lo, double hi) {
  auto b = smooth_bump(lo, hi);
  return [b](const RVec& xi) { return cplx(b.f(std::sqrt(sqnorm(xi))), 0.0); };
}

cplx I_p_probe(const TrigBoundaryData& f, double alpha, const PhiHat& phi_hat, int p, double a) {
  if (p < 0) throw std::invalid_argument("I_p_probe: order must be non-negative");
  RadialMultiplier q(alpha, f.n);
  cplx s = 0.0;
  for (const auto& m : f.modes) {
    const double x2 = sqnorm(m.xi);
    if (p >= 1 && x2 == 0.0) continue;
    RVec neg = m.xi;
    for (auto& v : neg) v = -v;
    const double zp = x2 == 0.0 ? q.z().evaluate(0.0) : q.z().derivative(p, alpha * x2 * a);
    s += m.c * phi_hat(neg) * std::pow(x2, p) * zp;
  }
  return std::pow(alpha, p) * s;
}

}  // namespace huaharm
