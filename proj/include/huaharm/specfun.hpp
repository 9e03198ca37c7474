#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "huaharm/quadrature.hpp"

namespace huaharm {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;
using MultiIdx = std::vector<int>;

inline constexpr int kIndexGuard = 60;

double pochhammer(double a, int n);
double hyp1f1(double a, double c, double x);
// Called the Legendre function in the harmonic-analysis literature.
double hyp0f1(double c, double x);
double beta_fn(double a, double b);

// Orthonormal Hermite function h_k(x) = H_k(x) e^{-x^2/2} / (sqrt(pi) 2^k k!)^{1/2}.
double hermite(int k, double x);
// All h_0..h_kmax at x.
std::vector<double> hermite_all(int kmax, double x);
double hermite_multi(const MultiIdx& k, const std::vector<double>& x);
// (2 pi |lambda|)^{n/4} h_k((2 pi |lambda|)^{1/2} x)
double hermite_scaled(const MultiIdx& k, double lambda, const std::vector<double>& x);

double laguerre(int k, double t);
// Generalized Laguerre L_k^{(a)}(t) for k = 0..kmax, three-term recurrence.
std::vector<double> laguerre_all(int kmax, double a, double t);
// e^{-t/2} L_k^{(a)}(t) for k = 0..kmax, rescaled so large t does not overflow.
std::vector<double> laguerre_damped(int kmax, double a, double t);
// prod_j L_{k_j}(|zeta_j|^2 / 2)
double laguerre_product(const MultiIdx& k, const CVec& zeta);
// (2 pi)^{-n/2} laguerre_product(k, zeta) e^{-|zeta|^2/4}
double phi_k(const MultiIdx& k, const CVec& zeta);

int abs_index(const MultiIdx& k);
void check_guard(const MultiIdx& k);

// Bounded solution of x y'' - gamma y' - (x + gamma + beta) y = 0 with y(0) = 1.
class BoundedHyperSolution {
 public:
  BoundedHyperSolution(double gamma, double beta);

  double gamma() const { return gamma_; }
  double beta() const { return beta_; }
  int k() const { return k_; }
  const QuadratureRule& rule() const { return rule_; }

  double evaluate(double x) const { return derivative(0, x); }
  // p-th derivative by differentiation under the integral sign.
  double derivative(int p, double x) const;
  // Same integral without the order guard, for internal use.
  double raw_derivative(int p, double x) const;
  // Residual x y'' - gamma y' - (x + gamma + beta) y.
  double residual(double x) const;

 private:
  double laguerre_path(int p, double x, const QuadratureRule& r) const;
  double adaptive_path(int p, double x) const;

  double gamma_, beta_;
  int k_;
  double log_norm_;
  QuadratureRule rule_;
  const QuadratureRule* rule2_ = nullptr;
};

// Bounded solution of x z'' - beta z' - z = 0 with z(0) = 1.
class BoundedLegendreSolution {
 public:
  explicit BoundedLegendreSolution(double beta);

  double beta() const { return beta_; }
  int k() const { return k_; }
  double normalization() const { return norm_; }
  const QuadratureRule& rule() const { return rule_; }

  double evaluate(double x) const { return derivative(0, x); }
  double derivative(int p, double x) const;
  double raw_derivative(int p, double x) const;
  double residual(double x) const;

 private:
  double beta_;
  int k_;
  double norm_;
  QuadratureRule rule_;
};

// Index k: floor(g) + 1 for non-integer g, g itself when g is an integer.
int singular_index(double g);

double ode_derivative(const BoundedHyperSolution& sol, int p, double x);
double ode_derivative(const BoundedLegendreSolution& sol, int p, double x);

struct ExponentFit {
  double exponent = 0.0;
  bool log_flag = false;
  double power_residual = 0.0;
  double log_residual = 0.0;
  // c1 of the preferred model, the coefficient of x^e or ln x
  double leading_coeff = 0.0;
};

struct FitOptions {
  double e_lo = -0.995;
  double e_hi = -0.005;
  int scan_points = 400;
  double fail_threshold = 0.1;
};

// Fits d(x) ~ c1 x^e + c2 x^{e+1} + c3 + c4 x and d(x) ~ c1 ln x + c2 x ln x + c3 + c4 x.
// Residuals are relative RMS. Throws FitFailure when neither model explains the data.
ExponentFit fit_exponent(const std::vector<double>& x, const std::vector<double>& d, const FitOptions& opt = {});

struct FitFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> geometric_grid(double lo, double hi, int count);

ExponentFit asymptotic_exponent(const BoundedHyperSolution& sol, const std::vector<double>& samples);
ExponentFit asymptotic_exponent(const BoundedLegendreSolution& sol, const std::vector<double>& samples);
ExponentFit asymptotic_exponent(const BoundedHyperSolution& sol);
ExponentFit asymptotic_exponent(const BoundedLegendreSolution& sol);

}  // namespace huaharm
