#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "huaharm/heisenberg.hpp"
#include "huaharm/specfun.hpp"

namespace huaharm {

using RVec = std::vector<double>;

// Fourier multiplier of Q_a^alpha on C^n: z(alpha |xi|^2 a), z the bounded Legendre-type solution with beta = alpha n.
class RadialMultiplier {
 public:
  RadialMultiplier(double alpha, int n);
  double alpha() const { return alpha_; }
  int n() const { return n_; }
  const BoundedLegendreSolution& z() const { return *z_; }
  double value(double a, const RVec& xi) const;
  // d^p/da^p of the multiplier
  double derivative(int p, double a, const RVec& xi) const;

 private:
  double alpha_;
  int n_;
  std::shared_ptr<const BoundedLegendreSolution> z_;
};

double q_multiplier(double alpha, int n, double a, const RVec& xi);

// Finite trigonometric model of bounded data on C^n = R^{2n}: sum_m c_m e^{i xi_m . zeta}.
struct TrigMode {
  RVec xi;
  cplx c;
};
struct TrigBoundaryData {
  int n = 1;
  std::vector<TrigMode> modes;
  double bound() const;  // sum |c_m|
  cplx operator()(const RVec& zeta) const;
  static TrigBoundaryData constant(int n, cplx c);
  static TrigBoundaryData single_mode(const RVec& xi, cplx c);
};

double sqnorm(const RVec& v);

cplx extend_Cn(const TrigBoundaryData& f, double alpha, double a, const RVec& zeta);
// alpha a (Delta - n d_a) F + a^2 d_a^2 F by finite differences in (zeta, a)
using CnFunc = std::function<cplx(const RVec& zeta, double a)>;
cplx op_Lambda_alpha(double alpha, int n, const CnFunc& F, const RVec& zeta, double a, const FdSpec& fd = {});

using PhiHat = std::function<cplx(const RVec& xi)>;
// Radial smooth bump in |xi| supported in [lo, hi]
PhiHat radial_bump(double lo, double hi);

// alpha^p sum_m c_m phi_hat(-xi_m) |xi_m|^{2p} z^{(p)}(alpha |xi_m|^2 a)
cplx I_p_probe(const TrigBoundaryData& f, double alpha, const PhiHat& phi_hat, int p, double a);

// g_kappa(x) = bounded_hyper(alpha n, 2 alpha kappa).evaluate(x)
double g_radial(double alpha, int n, int kappa, double x);
double g_radial_derivative(double alpha, int n, int kappa, int p, double x);
// g_kappa(x) for kappa = 0..K by a Miller continued fraction along kappa (direct quadrature otherwise)
RVec g_radial_all(double alpha, int n, int K, double x);

// e_kappa^lambda(w^{-1}) g_kappa(|lambda| a)
cplx p_kernel_term(double alpha, double lambda, int kappa, const HPoint& w, double a);

struct HKernelSpec {
  double alpha = 0.5;
  int n = 1;
  double lambda_min = 1e-3;
  // upper lambda limit is lambda_max_scaled / a
  double lambda_max_scaled = 40.0;
  int panels = 24;
  int per_panel = 12;
  double kappa_tol = 1e-13;
  int kappa_cap = 2000000;
  int kappa_cap_direct = 400;
};

double p_kernel_constant(int n);

// P_a^alpha sampled from the spectral series; built once per a.
class PKernel {
 public:
  PKernel(const HKernelSpec& spec, double a);
  double a() const { return a_; }
  const HKernelSpec& spec() const { return spec_; }
  double operator()(const HPoint& w) const;
  // Mass over [-T, T] x {|zeta| <= R} (n = 1), integrated analytically in zeta and t.
  double box_mass(double T, double R) const;
  int kappa_max() const { return kappa_max_; }
  bool truncation_ok() const { return truncation_ok_; }
  std::string warning() const { return warning_; }

 private:
  double node_contribution(std::size_t i, const HPoint& w) const;

  HKernelSpec spec_;
  double a_;
  RVec lambda_, weight_, edges_;
  std::vector<RVec> g_;
  double lambda_min_;
  RVec g_min_;
  int kappa_max_ = 0;
  bool truncation_ok_ = true;
  std::string warning_;
};

double p_kernel(const HKernelSpec& spec, const HPoint& w, double a);

// Boundary data on H^n as a finite combination of atoms b e_kappa^lambda.
struct HAtom {
  double lambda;
  int kappa;
  cplx b;
};

cplx heis_I_probe(const std::vector<HAtom>& f, double alpha, int n, const std::function<double(double)>& psi, int kappa,
                  int p, double a);

// psi_p(a) = lambda a^e + a^e int_1^a g_p(t) t^{-e-1} dt with e = n alpha - p + 1
double psi_p_ode(int n, double alpha, int p, const std::function<double(double)>& g_p, double lambda_const, double a);
// a psi' + (p - 1 - n alpha) psi - g_p(a), by central differences
double psi_p_residual(int n, double alpha, int p, const std::function<double(double)>& g_p, double lambda_const,
                      double a);

enum class Verdict { Regular, BlowUp };
const char* verdict_name(Verdict v);

struct ProbeConfig {
  double a_lo = 1e-4;
  double a_hi = 1.0;
  int samples = 25;
  double fit_lo = 1e-4;
  double fit_hi = 1e-2;
  double exponent_cut = -0.05;
  double residual_cut = 0.1;
  // share of the smallest-a value that the singular term must carry
  double dominance = 0.5;
};

struct OrderSummary {
  int p = 0;
  bool zero_signal = false;
  bool bounded = true;
  double exponent = 0.0;
  double residual = 0.0;
  bool log_flag = false;
};

struct DichotomyReport {
  int p = 0;  // probed order k+1
  int k = 0;
  RVec a_samples;
  std::vector<cplx> values;
  double fitted_exponent = 0.0;
  double expected_exponent = 0.0;
  double fit_residual = 0.0;
  double log_residual = 0.0;
  bool log_flag = false;
  bool fit_failed = false;
  Verdict verdict = Verdict::Regular;
  std::vector<OrderSummary> orders;
  std::string note;
};

using ProbeFn = std::function<cplx(int p, double a)>;
DichotomyReport run_dichotomy(const ProbeFn& probe, int k, double expected, const ProbeConfig& cfg = {});
DichotomyReport dichotomy_cn(const TrigBoundaryData& f, double alpha, const PhiHat& phi_hat,
                             const ProbeConfig& cfg = {});
DichotomyReport dichotomy_heis(const std::vector<HAtom>& f, double alpha, int n,
                               const std::function<double(double)>& psi, int kappa, const ProbeConfig& cfg = {});

}  // namespace huaharm
