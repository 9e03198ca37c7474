#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "huaharm/heisenberg.hpp"
#include "huaharm/jordan.hpp"

namespace huaharm::hua {

using jordan::CVecX;
using jordan::Mat;
using jordan::SGroupElement;
using jordan::Vec;

// Function on the tube V + i Omega in orthonormal coordinates.
using DFunc = std::function<cplx(const CVecX& z)>;
// Function on S given by the augmented matrix of the element.
using GFunc = std::function<cplx(const Mat& s)>;

enum class FieldKind { X, H, Xjk, Yjk };

// Indices are zero-based; Xjk and Yjk need j < k.
struct InvariantField {
  FieldKind kind = FieldKind::X;
  int j = 0;
  int k = -1;
  int alpha = 0;
  FdSpec fd{1e-2, 2};
  std::string name() const;
};

// Which H is subtracted in Delta_jk: the larger index (default) or the smaller one.
enum class OffDiagonalShift { LargerIndex, SmallerIndex };

// Sym(r) tube with its frame, Peirce basis and group S.
class HuaContext {
 public:
  explicit HuaContext(int r);
  const jordan::JordanAlgebra& algebra() const { return *V_; }
  const jordan::SGroup& group() const { return *G_; }
  int rank() const { return V_->rank(); }
  int dim() const { return V_->dim(); }
  Mat generator(const InvariantField& f) const;
  Mat affine(const SGroupElement& s) const { return G_->affine(s); }
  CVecX point(const Mat& s) const { return G_->act_affine(s, G_->ie()); }
  GFunc lift(DFunc F) const;
  std::vector<InvariantField> fields() const;

 private:
  std::unique_ptr<jordan::JordanAlgebra> V_;
  std::unique_ptr<jordan::SGroup> G_;
};

// d/dt F(s exp(tX) ie) at t = 0
cplx lie_derive(const HuaContext& C, const InvariantField& f, const GFunc& F, const Mat& s);
cplx lie_derive(const HuaContext& C, const InvariantField& f, const DFunc& F, const SGroupElement& s);
// d^2/dt^2 along the same one-parameter subgroup, i.e. X^2 F
cplx lie_derive2(const HuaContext& C, const InvariantField& f, const GFunc& F, const Mat& s);

cplx delta_j(const HuaContext& C, const GFunc& F, const Mat& s, int j, const FdSpec& fd = {1e-2, 2});
cplx delta_jk(const HuaContext& C, const GFunc& F, const Mat& s, int j, int k, int alpha = 0,
              OffDiagonalShift shift = OffDiagonalShift::LargerIndex, const FdSpec& fd = {1e-2, 2});
// Delta_j + 1/2 sum_{k<j} Delta_kj + 1/2 sum_{l>j} Delta_jl
cplx hua_j(const HuaContext& C, const GFunc& F, const Mat& s, int j,
           OffDiagonalShift shift = OffDiagonalShift::LargerIndex, const FdSpec& fd = {1e-2, 2});

// d_{z_u} d_{zbar_v} F at z for real directions u, v of V
cplx wirtinger(const DFunc& F, const CVecX& z, const Vec& u, const Vec& v, double h = 1e-3);
// max over coordinate pairs of |d_{z_p} d_{zbar_q} F|
double pluri_residual(const jordan::JordanAlgebra& V, const DFunc& F, const CVecX& z, double h = 1e-3);

// max over j, (j,k) of |Delta F(identity) - 4 d d-bar F(ie)| in the matching Peirce direction
double base_point_deviation(const HuaContext& C, const DFunc& F,
                            OffDiagonalShift shift = OffDiagonalShift::LargerIndex);

struct HuaReport {
  std::vector<double> delta;      // max over samples of |Delta_j F|, per j
  std::vector<double> delta_off;  // max over samples of |Delta_jk F|, per block in lexicographic order
  std::vector<double> hua;        // max over samples of |H_j F|, per j
  double pluri = 0.0;             // max over samples of the Wirtinger residual
  double tolerance = 1e-4;
  bool annihilated = false;       // every invariant residual within tolerance
  double max_invariant() const;
};
HuaReport hua_report(const HuaContext& C, const DFunc& F, const std::vector<SGroupElement>& samples,
                     double tol = 1e-4, OffDiagonalShift shift = OffDiagonalShift::LargerIndex);

// Re or Im of exp(i <z, u>), bounded on the tube when u lies in the closed cone.
DFunc exp_test_function(const Vec& u, bool real_part);
// |<z, c>|^2
DFunc modulus_squared(const Vec& c);

// s^+ -> [zeta, t, a] on the Heisenberg side (n = r - 1), the group map under which H_r becomes L_{1/2}.
SPoint heisenberg_image(const HuaContext& C, const SGroupElement& s_plus);
// G(s) = f(image of the s^+ factor of s)
GFunc pull_back(const HuaContext& C, SFunc f);

// Weight on S^- in canonical coordinates (x^-, y^-, a^-), supported in [-half_width, half_width]^D.
struct SMinusWeight {
  std::function<double(const Vec&)> psi;
  double half_width = 1.0;
};
int s_minus_dim(const HuaContext& C);
SGroupElement s_minus_element(const HuaContext& C, const Vec& coords);
// G_psi(s+) = int F(s^- s^+ ie) psi(s^-) ds^- by a tensor Gauss-Legendre rule
GFunc g_psi_average(const HuaContext& C, const DFunc& F, const SMinusWeight& w, int nodes_per_dim = 8);

// Probe int F(Phi(w, b)) psi(w) dw differentiated p times in b; psi(w) = exp(-|w|^2 / (2 sigma^2)).
struct Cond1Options {
  int nodes_per_dim = 3;
  double sigma = 0.5;
  // chart: frame permutation applied to z before evaluating F
  std::vector<int> permutation;
};
int cond1_max_order(const HuaContext& C);
cplx cond1_probe(const HuaContext& C, const DFunc& F, int p, double b, const Cond1Options& opt = {});
CVecX permute_point(const jordan::JordanAlgebra& V, const CVecX& z, const std::vector<int>& perm);

}  // namespace huaharm::hua
