#include <cmath>
#include <stdexcept>

#include "huaharm/heisenberg.hpp"

namespace huaharm {

namespace {
void reject_origin(const HPoint& w) {
  if (w.t == 0.0 && norm2(w.zeta) == 0.0) throw std::domain_error("kernel: singular at the origin");
}
double factorial(std::size_t n) { return std::tgamma(static_cast<double>(n) + 1.0); }
}  // namespace

cplx cauchy_constant(std::size_t n) {
  static const cplx ipow[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  return std::pow(2.0, double(n) - 1.0) * ipow[(n + 1) % 4] * factorial(n) / std::pow(M_PI, double(n + 1));
}

cplx cauchy_kernel(const HPoint& w) {
  reject_origin(w);
  const std::size_t n = w.dim();
  const cplx base(w.t, norm2(w.zeta));
  return cauchy_constant(n) * std::pow(base, -double(n + 1));
}

// Principal logarithms of |zeta|^2 -+ it, both in the closed right half-plane.
cplx log_kernel(const HPoint& w) {
  reject_origin(w);
  const std::size_t n = w.dim();
  if (n == 0) throw std::invalid_argument("log_kernel: n must be positive");
  const double r2 = norm2(w.zeta);
  const cplx minus(r2, -w.t), plus(r2, w.t);
  const double c = std::pow(2.0, double(n) - 2.0) * factorial(n - 1) / std::pow(M_PI, double(n + 1));
  return c * (std::log(minus) - std::log(plus)) * std::pow(minus, -double(n));
}

}  // namespace huaharm
