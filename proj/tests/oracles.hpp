#pragma once

// Reference computations that share no code with the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// Bounded solution of x y'' - g y' - (x + g + b) y = 0 by backward RK4 from x = X,
// started on the decaying branch e^{-x} x^{-b/2}. Returned values are unnormalized.
inline std::vector<double> shoot_hyper(double g, double b, const std::vector<double>& xs, double X = 40.0) {
  auto rhs = [&](double x, double y, double yp, double& dy, double& dyp) {
    dy = yp;
    dyp = (g * yp + (x + g + b) * y) / x;
  };
  double x = X, y = std::exp(-X) * std::pow(X, -b / 2.0);
  double yp = y * (-1.0 - b / (2.0 * X));
  std::vector<double> out(xs.size());
  std::vector<std::size_t> order(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto c) { return xs[a] > xs[c]; });
  for (std::size_t idx : order) {
    const double target = xs[idx];
    while (x > target) {
      double h = std::min(0.01, x / 200.0);
      if (x - h < target) h = x - target;
      double k1, l1, k2, l2, k3, l3, k4, l4;
      rhs(x, y, yp, k1, l1);
      rhs(x - h / 2, y - h / 2 * k1, yp - h / 2 * l1, k2, l2);
      rhs(x - h / 2, y - h / 2 * k2, yp - h / 2 * l2, k3, l3);
      rhs(x - h, y - h * k3, yp - h * l3, k4, l4);
      y -= h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
      yp -= h / 6 * (l1 + 2 * l2 + 2 * l3 + l4);
      x -= h;
    }
    out[idx] = y;
  }
  return out;
}

// K_nu(s) = int_0^inf e^{-s cosh t} cosh(nu t) dt by the trapezoid rule, which converges geometrically here.
inline double bessel_k(double nu, double s) {
  const double h = 0.01;
  double sum = 0.5 * std::exp(-s);
  for (int i = 1;; ++i) {
    const double t = i * h;
    const double term = std::exp(-s * std::cosh(t) + nu * t) * 0.5 * (1.0 + std::exp(-2.0 * nu * t));
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return h * sum;
}

// Bounded solution of x z'' - b z' - z = 0 with z(0) = 1.
inline double legendre_bounded(double b, double x) {
  const double nu = b + 1.0;
  return 2.0 / std::tgamma(nu) * std::pow(x, nu / 2.0) * bessel_k(nu, 2.0 * std::sqrt(x));
}

// Five-point central differences.
inline double d1(const std::function<double(double)>& f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}
inline double d2(const std::function<double(double)>& f, double x, double h) {
  return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) / (12 * h * h);
}
inline cplx cd1(const std::function<cplx(double)>& f, double h) {
  return (f(-2 * h) - 8.0 * f(-h) + 8.0 * f(h) - f(2 * h)) / (12 * h);
}
inline cplx cd2(const std::function<cplx(double)>& f, double h) {
  return (-f(-2 * h) + 16.0 * f(-h) - 30.0 * f(0) + 16.0 * f(h) - f(2 * h)) / (12 * h * h);
}

// Heisenberg group H^n with [z, t][w, s] = [z + w, t + s + 2 Im(z . conj w)].
struct HP {
  std::vector<cplx> z;
  double t;
};
inline HP hmul(const HP& p, const HP& q) {
  HP r{p.z, p.t + q.t};
  for (std::size_t j = 0; j < p.z.size(); ++j) {
    r.z[j] += q.z[j];
    r.t += 2.0 * std::imag(p.z[j] * std::conj(q.z[j]));
  }
  return r;
}

// -1/4 sum_j (X_j^2 + Y_j^2) f at p, with X_j, Y_j the left-invariant fields along the j-th real and imaginary axes.
inline cplx sublaplacian(const std::function<cplx(const HP&)>& f, const HP& p, double h = 1e-3) {
  cplx s = 0.0;
  for (std::size_t j = 0; j < p.z.size(); ++j) {
    for (cplx dir : {cplx(1, 0), cplx(0, 1)}) {
      auto g = [&](double u) {
        HP q{std::vector<cplx>(p.z.size(), 0.0), 0.0};
        q.z[j] = u * dir;
        return f(hmul(p, q));
      };
      s += cd2(g, h);
    }
  }
  return -0.25 * s;
}
inline cplx t_derivative(const std::function<cplx(const HP&)>& f, const HP& p, int order, double h = 1e-3) {
  auto g = [&](double u) { return f(HP{p.z, p.t + u}); };
  return order == 1 ? cd1(g, h) : cd2(g, h);
}

// Generalized Laguerre by the explicit sum.
inline double laguerre(int k, double a, double x) {
  double s = 0.0;
  for (int i = 0; i <= k; ++i) {
    const double binom = std::tgamma(k + a + 1) / (std::tgamma(k - i + 1) * std::tgamma(a + i + 1));
    s += binom * std::pow(-x, i) / std::tgamma(i + 1);
  }
  return s;
}

}  // namespace oracle
