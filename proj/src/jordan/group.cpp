#include <cmath>

#include "huaharm/jordan.hpp"

namespace huaharm::jordan {

namespace {
// number of y coefficients in block j
int ycount(int r, int d, int j) { return (r - 1 - j) * d; }
}  // namespace

SGroup::SGroup(const JordanAlgebra& V, const PeirceBasis& P) : V_(&V), P_(P) {}

SGroupElement SGroup::identity() const {
  const int r = rank();
  SGroupElement g{Vec::Zero(dim()), {}, Vec::Zero(r)};
  for (int j = 0; j + 1 < r; ++j) g.y.push_back(Vec::Zero(ycount(r, P_.d, j)));
  return g;
}

SGroupElement SGroup::random(std::mt19937_64& rng, double scale) const {
  std::uniform_real_distribution<double> u(-scale, scale);
  SGroupElement g = identity();
  for (int i = 0; i < g.x.size(); ++i) g.x[i] = u(rng);
  for (auto& v : g.y)
    for (int i = 0; i < v.size(); ++i) v[i] = u(rng);
  for (int i = 0; i < g.a.size(); ++i) g.a[i] = u(rng);
  return g;
}

Mat SGroup::tau(int j, const Vec& yj) const {
  Vec v = Vec::Zero(dim());
  int idx = 0;
  for (int k = j + 1; k < rank(); ++k)
    for (int al = 0; al < P_.d; ++al) v += yj[idx++] * P_.e(j, k, al);
  return expm(2.0 * V_->box(v, P_.frame.c[j]));
}

Mat SGroup::a_part(const Vec& a) const {
  Vec h = Vec::Zero(dim());
  for (int j = 0; j < rank(); ++j) h += a[j] * P_.frame.c[j];
  return expm(V_->L(h));
}

Mat SGroup::n_part(const std::vector<Vec>& y) const {
  Mat N = Mat::Identity(dim(), dim());
  for (std::size_t j = 0; j < y.size(); ++j) N = N * tau(static_cast<int>(j), y[j]);
  return N;
}

Mat SGroup::linear(const SGroupElement& g) const { return n_part(g.y) * a_part(g.a); }

Mat SGroup::affine(const SGroupElement& g) const {
  const int m = dim();
  Mat A = Mat::Identity(m + 1, m + 1);
  A.topLeftCorner(m, m) = linear(g);
  A.topRightCorner(m, 1) = g.x;
  return A;
}

SGroupElement SGroup::decompose_linear(const Mat& M) const {
  const int r = rank(), m = dim();
  SGroupElement g = identity();
  const Mat Mp = P_.ordered.transpose() * M * P_.ordered;
  for (int j = 0; j < r; ++j) {
    const int c = P_.column(j, j);
    if (!(Mp(c, c) > 0.0)) throw RefactorError("decompose: non-positive diagonal entry");
    g.a[j] = std::log(Mp(c, c));
  }
  Mat N = M * a_part(-g.a);
  // tau(y^j) is the only factor moving c_j into V_jk, k > j
  for (int j = 0; j + 1 < r; ++j) {
    const Vec v = N * P_.frame.c[j];
    int idx = 0;
    for (int k = j + 1; k < r; ++k)
      for (int al = 0; al < P_.d; ++al) g.y[j][idx++] = P_.e(j, k, al).dot(v);
    N = tau(j, -g.y[j]) * N;
  }
  if ((N - Mat::Identity(m, m)).cwiseAbs().maxCoeff() > 1e-8 * std::max(1.0, M.cwiseAbs().maxCoeff()))
    throw RefactorError("decompose: linear part is not in N0 A");
  return g;
}

SGroupElement SGroup::from_affine(const Mat& A) const {
  const int m = dim();
  SGroupElement g = decompose_linear(A.topLeftCorner(m, m));
  g.x = A.topRightCorner(m, 1);
  return g;
}

SGroupElement SGroup::compose(const SGroupElement& g, const SGroupElement& h) const {
  return from_affine(affine(g) * affine(h));
}

SGroupElement SGroup::inverse(const SGroupElement& g) const { return from_affine(affine(g).inverse()); }

CVecX SGroup::act_affine(const Mat& A, const CVecX& z) const {
  const int m = dim();
  CVecX out = A.topLeftCorner(m, m).cast<std::complex<double>>() * z;
  out += A.topRightCorner(m, 1).cast<std::complex<double>>();
  return out;
}

CVecX SGroup::act(const SGroupElement& g, const CVecX& z) const { return act_affine(affine(g), z); }

CVecX SGroup::ie() const { return std::complex<double>(0.0, 1.0) * V_->unit().cast<std::complex<double>>(); }

SGroupElement SGroup::section(const CVecX& z) const {
  const int m = dim();
  const Mat Y = V_->to_matrix(Vec(z.imag()));
  Eigen::LLT<Mat> llt(Y);
  if (llt.info() != Eigen::Success) throw std::domain_error("section: Im z is not in the cone");
  const Mat Lc = llt.matrixL();
  Mat M(m, m);
  for (int i = 0; i < m; ++i) M.col(i) = V_->from_matrix(Lc * V_->to_matrix(V_->basis(i)) * Lc.transpose());
  SGroupElement g = decompose_linear(M);
  g.x = z.real();
  return g;
}

std::pair<SGroupElement, SGroupElement> SGroup::split(const SGroupElement& g) const {
  const int r = rank(), R = r - 1, m = dim();
  const Mat M = linear(g);
  const SGroupElement full = decompose_linear(M);
  SGroupElement sm = identity();
  for (int j = 0; j < R; ++j) sm.a[j] = full.a[j];
  Mat N = M * a_part(-full.a);
  for (int j = 0; j + 1 < R; ++j) {
    const Vec v = N * P_.frame.c[j];
    int idx = 0;
    for (int k = j + 1; k < r; ++k)
      for (int al = 0; al < P_.d; ++al, ++idx)
        if (k < R) sm.y[j][idx] = P_.e(j, k, al).dot(v);
    N = tau(j, -sm.y[j]) * N;
  }
  const Mat Mm = linear(sm);
  const Mat Mminv = Mm.inverse();
  SGroupElement sp = decompose_linear(Mminv * M);
  // projector onto the Peirce 1-space of e - c_r
  Mat Pm = Mat::Zero(m, m);
  for (std::size_t b = 0; b < P_.blocks.size(); ++b)
    if (P_.blocks[b].second < R) Pm += P_.vectors[b] * P_.vectors[b].transpose();
  sm.x = Pm * g.x;
  sp.x = Mminv * (g.x - sm.x);
  return {sm, sp};
}

Mat SGroup::lie_translation(const Vec& v) const {
  const int m = dim();
  Mat A = Mat::Zero(m + 1, m + 1);
  A.topRightCorner(m, 1) = v;
  return A;
}

Mat SGroup::lie_X(int j) const { return lie_translation(P_.frame.c[j]); }

Mat SGroup::lie_H(int j) const {
  const int m = dim();
  Mat A = Mat::Zero(m + 1, m + 1);
  A.topLeftCorner(m, m) = V_->L(P_.frame.c[j]);
  return A;
}

Mat SGroup::lie_Xjk(int j, int k, int alpha) const { return lie_translation(P_.e(j, k, alpha)); }

Mat SGroup::lie_Yjk(int j, int k, int alpha) const {
  if (!(j < k)) throw std::invalid_argument("lie_Yjk: need j < k");
  const int m = dim();
  Mat A = Mat::Zero(m + 1, m + 1);
  A.topLeftCorner(m, m) = 2.0 * V_->box(P_.e(j, k, alpha), P_.frame.c[j]);
  return A;
}

double SGroup::triangularity_deviation(const Mat& M) const {
  const Mat Mp = P_.ordered.transpose() * M * P_.ordered;
  double dev = 0.0;
  for (int i = 0; i < Mp.rows(); ++i)
    for (int j = i + 1; j < Mp.cols(); ++j) dev = std::max(dev, std::abs(Mp(i, j)));
  return dev;
}

namespace {
Mat bracket(const Mat& A, const Mat& B) { return A * B - B * A; }
}  // namespace

WeightReport adjoint_weight_check(const SGroup& G) {
  WeightReport rep;
  const auto& P = G.peirce_basis();
  const int r = G.rank();
  for (int h = 0; h < r; ++h) {
    const Mat H = G.lie_H(h);
    auto lam = [&](int i) { return i == h ? 1.0 : 0.0; };
    for (const auto& [i, j] : P.blocks)
      for (int al = 0; al < P.vectors[P.block_index(i, j)].cols(); ++al) {
        const Mat X = G.lie_Xjk(i, j, al);
        rep.v_dev = std::max(rep.v_dev, (bracket(H, X) - 0.5 * (lam(i) + lam(j)) * X).cwiseAbs().maxCoeff());
        if (i < j) {
          const Mat N = G.lie_Yjk(i, j, al);
          rep.n_dev = std::max(rep.n_dev, (bracket(H, N) - 0.5 * (lam(j) - lam(i)) * N).cwiseAbs().maxCoeff());
        }
      }
  }
  return rep;
}

BracketReport splus_brackets(const SGroup& G) {
  BracketReport rep;
  const int r = G.rank(), R = r - 1, d = G.peirce_basis().d;
  auto add = [&](const std::string& name, const Mat& lhs, const Mat& rhs) {
    const double dev = (lhs - rhs).cwiseAbs().maxCoeff();
    rep.entries.emplace_back(name, dev);
    rep.max_dev = std::max(rep.max_dev, dev);
  };
  const Mat Xr = G.lie_X(R), Hr = G.lie_H(R);
  const Mat Z = Mat::Zero(Xr.rows(), Xr.cols());
  add("[H_r,X_r]=X_r", bracket(Hr, Xr), Xr);
  for (int j = 0; j < R; ++j)
    for (int al = 0; al < d; ++al) {
      const std::string s = std::to_string(j + 1) + "r" + (d > 1 ? "^" + std::to_string(al + 1) : "");
      const Mat X = G.lie_Xjk(j, R, al), Y = G.lie_Yjk(j, R, al);
      add("[Y_" + s + ",X_" + s + "]=X_r", bracket(Y, X), Xr);
      add("[H_r,X_" + s + "]=X_" + s + "/2", bracket(Hr, X), 0.5 * X);
      add("[Y_" + s + ",X_r]=0", bracket(Y, Xr), Z);
      for (int k = 0; k < R; ++k)
        for (int be = 0; be < d; ++be) {
          if (k == j && be == al) continue;
          const std::string t = std::to_string(k + 1) + "r" + (d > 1 ? "^" + std::to_string(be + 1) : "");
          add("[Y_" + s + ",X_" + t + "]=0", bracket(Y, G.lie_Xjk(k, R, be)), Z);
          add("[Y_" + s + ",Y_" + t + "]=0", bracket(Y, G.lie_Yjk(k, R, be)), Z);
        }
    }
  return rep;
}

}  // namespace huaharm::jordan
