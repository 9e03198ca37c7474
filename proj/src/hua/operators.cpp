#include <cmath>

#include "huaharm/hua.hpp"

namespace huaharm::hua {

namespace {
const cplx I(0.0, 1.0);
}

cplx delta_j(const HuaContext& C, const GFunc& F, const Mat& s, int j, const FdSpec& fd) {
  InvariantField x{FieldKind::X, j, -1, 0, fd}, h{FieldKind::H, j, -1, 0, fd};
  return lie_derive2(C, x, F, s) + lie_derive2(C, h, F, s) - lie_derive(C, h, F, s);
}

cplx delta_jk(const HuaContext& C, const GFunc& F, const Mat& s, int j, int k, int alpha, OffDiagonalShift shift,
              const FdSpec& fd) {
  if (j > k) std::swap(j, k);
  if (j == k) throw std::invalid_argument("delta_jk: need distinct indices");
  InvariantField x{FieldKind::Xjk, j, k, alpha, fd}, y{FieldKind::Yjk, j, k, alpha, fd};
  InvariantField h{FieldKind::H, shift == OffDiagonalShift::LargerIndex ? k : j, -1, 0, fd};
  return lie_derive2(C, x, F, s) + lie_derive2(C, y, F, s) - lie_derive(C, h, F, s);
}

cplx hua_j(const HuaContext& C, const GFunc& F, const Mat& s, int j, OffDiagonalShift shift, const FdSpec& fd) {
  const int r = C.rank(), d = C.group().peirce_basis().d;
  cplx acc = delta_j(C, F, s, j, fd);
  for (int k = 0; k < r; ++k) {
    if (k == j) continue;
    for (int al = 0; al < d; ++al) acc += 0.5 * delta_jk(C, F, s, std::min(j, k), std::max(j, k), al, shift, fd);
  }
  return acc;
}

namespace {
// second derivative of F along the complex direction v
cplx d2(const DFunc& F, const CVecX& z, const CVecX& v, double h) {
  return richardson([&](double t) { return F(z + t * v); }, 2, FdSpec{h, 2});
}
// real mixed partial along directions a, b by polarization
cplx mixed(const DFunc& F, const CVecX& z, const CVecX& a, const CVecX& b, double h) {
  return 0.25 * (d2(F, z, a + b, h) - d2(F, z, a - b, h));
}
}  // namespace

cplx wirtinger(const DFunc& F, const CVecX& z, const Vec& u, const Vec& v, double h) {
  const CVecX xu = u.cast<cplx>(), xv = v.cast<cplx>();
  const CVecX yu = I * xu, yv = I * xv;
  // d_z = (d_x - i d_y)/2, d_zbar = (d_x + i d_y)/2
  return 0.25 * (mixed(F, z, xu, xv, h) + mixed(F, z, yu, yv, h) + I * (mixed(F, z, xu, yv, h) - mixed(F, z, yu, xv, h)));
}

double pluri_residual(const jordan::JordanAlgebra& V, const DFunc& F, const CVecX& z, double h) {
  double worst = 0.0;
  for (int p = 0; p < V.dim(); ++p)
    for (int q = 0; q < V.dim(); ++q) worst = std::max(worst, std::abs(wirtinger(F, z, V.basis(p), V.basis(q), h)));
  return worst;
}

double base_point_deviation(const HuaContext& C, const DFunc& F, OffDiagonalShift shift) {
  const auto& P = C.group().peirce_basis();
  const Mat id = Mat::Identity(C.dim() + 1, C.dim() + 1);
  const GFunc G = C.lift(F);
  const CVecX ie = C.group().ie();
  double worst = 0.0;
  for (int j = 0; j < C.rank(); ++j) {
    const Vec c = P.frame.c[j];
    worst = std::max(worst, std::abs(delta_j(C, G, id, j) - 4.0 * wirtinger(F, ie, c, c)));
    for (int k = j + 1; k < C.rank(); ++k)
      for (int al = 0; al < P.d; ++al) {
        const Vec e = P.e(j, k, al);
        worst = std::max(worst, std::abs(delta_jk(C, G, id, j, k, al, shift) - 4.0 * wirtinger(F, ie, e, e)));
      }
  }
  return worst;
}

double HuaReport::max_invariant() const {
  double m = 0.0;
  for (double v : delta) m = std::max(m, v);
  for (double v : delta_off) m = std::max(m, v);
  for (double v : hua) m = std::max(m, v);
  return m;
}

HuaReport hua_report(const HuaContext& C, const DFunc& F, const std::vector<SGroupElement>& samples, double tol,
                     OffDiagonalShift shift) {
  HuaReport rep;
  rep.tolerance = tol;
  const int r = C.rank(), d = C.group().peirce_basis().d;
  rep.delta.assign(r, 0.0);
  rep.hua.assign(r, 0.0);
  rep.delta_off.assign(r * (r - 1) / 2 * d, 0.0);
  const GFunc G = C.lift(F);
  for (const auto& s : samples) {
    const Mat A = C.affine(s);
    int idx = 0;
    for (int j = 0; j < r; ++j) {
      rep.delta[j] = std::max(rep.delta[j], std::abs(delta_j(C, G, A, j)));
      rep.hua[j] = std::max(rep.hua[j], std::abs(hua_j(C, G, A, j, shift)));
      for (int k = j + 1; k < r; ++k)
        for (int al = 0; al < d; ++al, ++idx)
          rep.delta_off[idx] = std::max(rep.delta_off[idx], std::abs(delta_jk(C, G, A, j, k, al, shift)));
    }
    rep.pluri = std::max(rep.pluri, pluri_residual(C.algebra(), F, C.point(A)));
  }
  rep.annihilated = rep.max_invariant() <= tol;
  return rep;
}

DFunc exp_test_function(const Vec& u, bool real_part) {
  const CVecX uc = u.cast<cplx>();
  return [uc, real_part](const CVecX& z) {
    const cplx v = std::exp(I * (z.transpose() * uc)(0));
    return cplx(real_part ? v.real() : v.imag(), 0.0);
  };
}

DFunc modulus_squared(const Vec& c) {
  const CVecX cc = c.cast<cplx>();
  return [cc](const CVecX& z) { return cplx(std::norm((z.transpose() * cc)(0)), 0.0); };
}

SPoint heisenberg_image(const HuaContext& C, const SGroupElement& sp) {
  const auto& P = C.group().peirce_basis();
  const int R = C.rank() - 1, d = P.d;
  const std::size_t n = static_cast<std::size_t>(R * d);
  SPoint out = s_identity(n);
  // translation part: X_jr -> X_j / 2, X_r -> T
  SPoint tr = s_identity(n);
  for (int j = 0; j < R; ++j)
    for (int al = 0; al < d; ++al) tr.zeta[j * d + al] = 0.5 * P.e(j, R, al).dot(sp.x);
  out = s_mul(out, tr);
  SPoint tt = s_identity(n);
  tt.t = P.frame.c[R].dot(sp.x);
  out = s_mul(out, tt);
  // N^+ part: Y_jr -> Y_j / 2
  for (int j = 0; j < R; ++j)
    for (int al = 0; al < d; ++al) {
      SPoint ty = s_identity(n);
      ty.zeta[j * d + al] = cplx(0.0, 0.5 * sp.y[j][(R - j - 1) * d + al]);
      out = s_mul(out, ty);
    }
  SPoint ta = s_identity(n);
  ta.a = std::exp(sp.a[R]);
  return s_mul(out, ta);
}

GFunc pull_back(const HuaContext& C, SFunc f) {
  return [&C, f = std::move(f)](const Mat& s) {
    const auto parts = C.group().split(C.group().from_affine(s));
    return f(heisenberg_image(C, parts.second));
  };
}

}  // namespace huaharm::hua
