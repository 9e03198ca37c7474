#include <cmath>

#include "huaharm/hua.hpp"

namespace huaharm::hua {

std::string InvariantField::name() const {
  const std::string a = std::to_string(j + 1), b = std::to_string(k + 1);
  switch (kind) {
    case FieldKind::X: return "X_" + a;
    case FieldKind::H: return "H_" + a;
    case FieldKind::Xjk: return "X_" + a + b;
    default: return "Y_" + a + b;
  }
}

HuaContext::HuaContext(int r) {
  V_ = std::make_unique<jordan::JordanAlgebra>(jordan::JordanAlgebra::sym(r));
  const auto P = jordan::peirce(*V_, jordan::standard_frame(*V_));
  G_ = std::make_unique<jordan::SGroup>(*V_, P);
}

Mat HuaContext::generator(const InvariantField& f) const {
  switch (f.kind) {
    case FieldKind::X: return G_->lie_X(f.j);
    case FieldKind::H: return G_->lie_H(f.j);
    case FieldKind::Xjk: return G_->lie_Xjk(f.j, f.k, f.alpha);
    default: return G_->lie_Yjk(f.j, f.k, f.alpha);
  }
}

GFunc HuaContext::lift(DFunc F) const {
  return [this, F = std::move(F)](const Mat& s) { return F(point(s)); };
}

std::vector<InvariantField> HuaContext::fields() const {
  std::vector<InvariantField> out;
  const int r = rank(), d = G_->peirce_basis().d;
  for (int j = 0; j < r; ++j) {
    out.push_back({FieldKind::X, j});
    out.push_back({FieldKind::H, j});
  }
  for (int j = 0; j < r; ++j)
    for (int k = j + 1; k < r; ++k)
      for (int al = 0; al < d; ++al) {
        out.push_back({FieldKind::Xjk, j, k, al});
        out.push_back({FieldKind::Yjk, j, k, al});
      }
  return out;
}

namespace {
std::function<cplx(double)> along(const HuaContext& C, const InvariantField& f, const GFunc& F, const Mat& s) {
  const Mat X = C.generator(f);
  return [X, F, s](double t) { return F(s * jordan::expm(t * X)); };
}
}  // namespace

cplx lie_derive(const HuaContext& C, const InvariantField& f, const GFunc& F, const Mat& s) {
  return richardson(along(C, f, F, s), 1, f.fd);
}

cplx lie_derive(const HuaContext& C, const InvariantField& f, const DFunc& F, const SGroupElement& s) {
  return lie_derive(C, f, C.lift(F), C.affine(s));
}

cplx lie_derive2(const HuaContext& C, const InvariantField& f, const GFunc& F, const Mat& s) {
  return richardson(along(C, f, F, s), 2, f.fd);
}

}  // namespace huaharm::hua
