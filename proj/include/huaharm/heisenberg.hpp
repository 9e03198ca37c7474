#pragma once

#include <functional>
#include <vector>

#include "huaharm/specfun.hpp"

namespace huaharm {

// [zeta, t] in H^n
struct HPoint {
  CVec zeta;
  double t = 0.0;
  std::size_t dim() const { return zeta.size(); }
};

// [zeta, t, a] in S, a > 0; corresponds to (zeta, t + i|zeta|^2 + ia)
struct SPoint {
  CVec zeta;
  double t = 0.0;
  double a = 1.0;
  std::size_t dim() const { return zeta.size(); }
  HPoint base() const { return {zeta, t}; }
};

// z = (z', z_{n+1}) in C^{n+1}
struct SiegelPoint {
  CVec z;
  std::size_t dim() const { return z.empty() ? 0 : z.size() - 1; }
  // Im z_{n+1} - |z'|^2
  double r() const;
  bool interior() const { return r() > 0.0; }
};

double norm2(const CVec& z);
// sum_j a_j conj(b_j)
cplx hdot(const CVec& a, const CVec& b);

HPoint hn_identity(std::size_t n);
HPoint hn_mul(const HPoint& p, const HPoint& q);
HPoint hn_inv(const HPoint& p);

SPoint s_identity(std::size_t n);
SPoint s_mul(const SPoint& p, const SPoint& q);
SPoint s_inv(const SPoint& p);
SiegelPoint s_act(const SPoint& p, const SiegelPoint& z);
SiegelPoint dilate(double delta, const SiegelPoint& z);
// p . (0, i)
SiegelPoint to_siegel(const SPoint& p);
// inverse of to_siegel on the interior
SPoint from_siegel(const SiegelPoint& z);

enum class FieldTag { X, Y, T, Z, Zbar, ADa, Da, Znp1, Zbarnp1 };

struct FdSpec {
  double h = 1e-3;
  int levels = 2;
};

// Index j is zero-based and only used by X, Y, Z, Zbar.
struct FieldId {
  FieldTag tag = FieldTag::T;
  int j = 0;
  FdSpec fd{};
};

using HFunc = std::function<cplx(const HPoint&)>;
using SFunc = std::function<cplx(const SPoint&)>;

// Central differences extrapolated by Richardson; order 1 or 2.
cplx richardson(const std::function<cplx(double)>& g, int order, const FdSpec& fd);

// Derivative d/ds f(p . gamma(s)) at 0 along the one-parameter subgroup of the field.
// On S the fields X, Y, T act on (zeta, t) at fixed a; ADa is a d/da and Da is d/da.
cplx apply_field(const FieldId& field, const HFunc& f, const HPoint& p);
cplx apply_field(const FieldId& field, const SFunc& f, const SPoint& p);
// Second derivative along the same curve (real fields only).
cplx apply_field2(const FieldId& field, const HFunc& f, const HPoint& p);
cplx apply_field2(const FieldId& field, const SFunc& f, const SPoint& p);

// The field applied to f, returned as a new callable.
HFunc field_fn(const FieldId& field, HFunc f);
SFunc field_fn(const FieldId& field, SFunc f);

// -1/4 sum_j (X_j^2 + Y_j^2) f + i alpha T f
cplx op_calL_alpha(double alpha, const HFunc& f, const HPoint& p, const FdSpec& fd = {});
cplx op_calL_alpha(double alpha, const SFunc& f, const SPoint& p, const FdSpec& fd = {});
HFunc calL_fn(double alpha, HFunc f, const FdSpec& fd = {});
// -alpha a (calL_0 + n d_a) F + a^2 (d_a^2 + T^2) F
cplx op_L_alpha(double alpha, const SFunc& F, const SPoint& p, const FdSpec& fd = {});

struct BoundaryResiduals {
  double cr = 0.0;  // max_j |Zbar_j f|
  cplx hol;         // calL_n f
  cplx antihol;     // calL_{-n} f
  cplx pluri;       // (calL^2 + n^2 T^2) f
};
BoundaryResiduals boundary_residuals(const HFunc& f, const HPoint& p, const FdSpec& fd = {});

// Two scalings of the representation family. Classical keeps R^lambda with the
// e^{2 pi i lambda t/4} factor; Spectral relabels lambda so that
// calL e_kappa^lambda = (2 kappa + n)|lambda| e_kappa^lambda and T^2 e = -lambda^2 e.
// Spectral at lambda equals Classical at 2 lambda / pi.
enum class RepConvention { Spectral, Classical };

double classical_lambda(double lambda, RepConvention conv);

// <R^lambda(w) h_k^lambda, h_j^lambda> by Gauss-Hermite quadrature.
cplx rep_coeff(double lambda, const MultiIdx& k, const MultiIdx& j, const HPoint& w,
               RepConvention conv = RepConvention::Spectral, int nodes = 64);
// Diagonal coefficient through the Laguerre closed form (checked against rep_coeff once per n).
cplx rep_coeff_diag_fast(double lambda, const MultiIdx& k, const HPoint& w,
                         RepConvention conv = RepConvention::Spectral);

// sum_{|k| = kappa} prod_j L_{k_j}(s_j), all kappa = 0..K at once.
std::vector<double> laguerre_shell_sums(const std::vector<double>& s, int K);
// Spatial factor of e_kappa^lambda in the spectral scaling, kappa = 0..K:
// sum_{|k|=kappa} prod_j L_{k_j}(2|lambda||zeta_j|^2) e^{-|lambda||zeta|^2}
std::vector<double> ell_kappa_all(double lambda, const CVec& zeta, int K);

cplx e_kappa_lambda(double lambda, int kappa, const HPoint& w, RepConvention conv = RepConvention::Spectral);
cplx e_kappa_lambda_quadrature(double lambda, int kappa, const HPoint& w,
                               RepConvention conv = RepConvention::Spectral);

// A profile psi supported in [lo, hi] with 0 outside the closed interval.
struct LambdaProfile {
  double lo = 0.5;
  double hi = 2.0;
  std::function<double(double)> f;
};
LambdaProfile smooth_bump(double lo, double hi, double height = 1.0);

cplx e_kappa_psi(int kappa, const LambdaProfile& psi, const HPoint& w, int panels = 8, int per_panel = 16,
                 RepConvention conv = RepConvention::Spectral);

cplx cauchy_kernel(const HPoint& w);
cplx cauchy_constant(std::size_t n);
cplx log_kernel(const HPoint& w);

// F3f(eta, lambda) = int f(eta, s) e^{i lambda s} ds, the partial Fourier transform in t.
using PartialFT = std::function<cplx(const CVec& eta, double lambda)>;

struct InversionOptions {
  int panels = 8;
  int per_panel = 12;
  int gh_nodes = 40;
  // Gaussian width of f in zeta used to centre the Gauss-Hermite grid: f ~ e^{-|zeta|^2/width^2}
  double width = 1.0;
};

// Per-kappa contributions kappa = 0..K of sum_kappa int f(w^{-1} v) e_kappa^psi(v) dv (spectral scaling).
std::vector<cplx> inversion_terms(const PartialFT& F3f, const LambdaProfile& psi, int K, const HPoint& w,
                                  const InversionOptions& opt = {});
// Limit of the partial sums: (pi/2)^n int psi(lambda) |lambda|^{-n} F3f(zeta, lambda) e^{i lambda t} d lambda.
cplx inversion_target(const PartialFT& F3f, const LambdaProfile& psi, const HPoint& w,
                      const InversionOptions& opt = {});

}  // namespace huaharm
