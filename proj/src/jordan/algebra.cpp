#include <cmath>

#include "huaharm/jordan.hpp"

namespace huaharm::jordan {

Mat expm(const Mat& A) {
  static const double c[7] = {1.0, 0.5, 5.0 / 44.0, 1.0 / 66.0, 1.0 / 792.0, 1.0 / 15840.0, 1.0 / 665280.0};
  const double norm = A.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  if (norm > 0.5) s = std::max(0, static_cast<int>(std::ceil(std::log2(norm / 0.5))));
  const Mat X = A / std::ldexp(1.0, s);
  const Mat I = Mat::Identity(A.rows(), A.cols());
  Mat P = I * c[0], Q = I * c[0], Xk = I;
  for (int k = 1; k <= 6; ++k) {
    Xk = Xk * X;
    P += c[k] * Xk;
    Q += ((k % 2) ? -c[k] : c[k]) * Xk;
  }
  Mat E = Q.partialPivLu().solve(P);
  for (int i = 0; i < s; ++i) E = E * E;
  return E;
}

JordanAlgebra JordanAlgebra::sym(int r) {
  if (r < 1) throw std::invalid_argument("Sym(r): rank must be positive");
  JordanAlgebra V;
  V.r_ = r;
  V.d_ = 1;
  for (int j = 0; j < r; ++j)
    for (int k = j; k < r; ++k) {
      Mat B = Mat::Zero(r, r);
      if (j == k) B(j, j) = 1.0;
      else B(j, k) = B(k, j) = 1.0 / std::sqrt(2.0);
      V.realization_.push_back(B);
      V.labels_.push_back(std::to_string(j + 1) + std::to_string(k + 1));
    }
  V.m_ = static_cast<int>(V.realization_.size());
  for (int i = 0; i < V.m_; ++i) {
    Mat T(V.m_, V.m_);
    for (int j = 0; j < V.m_; ++j) {
      const Mat& Bi = V.realization_[i];
      const Mat& Bj = V.realization_[j];
      T.col(j) = V.from_matrix(0.5 * (Bi * Bj + Bj * Bi));
    }
    V.table_.push_back(T);
  }
  V.e_ = V.from_matrix(Mat::Identity(r, r));
  return V;
}

Vec JordanAlgebra::basis(int i) const {
  Vec v = Vec::Zero(m_);
  v[i] = 1.0;
  return v;
}

Mat JordanAlgebra::L(const Vec& x) const {
  Mat M = Mat::Zero(m_, m_);
  for (int i = 0; i < m_; ++i)
    if (x[i] != 0.0) M += x[i] * table_[i];
  return M;
}

Mat JordanAlgebra::box(const Vec& x, const Vec& y) const {
  const Mat Lx = L(x), Ly = L(y);
  return L(mul(x, y)) + Lx * Ly - Ly * Lx;
}

Mat JordanAlgebra::to_matrix(const Vec& x) const {
  Mat X = Mat::Zero(r_, r_);
  for (int i = 0; i < m_; ++i) X += x[i] * realization_[i];
  return X;
}

Vec JordanAlgebra::from_matrix(const Mat& X) const {
  Vec v(m_);
  for (int i = 0; i < m_; ++i) v[i] = (realization_[i] * X).trace();
  return v;
}

Eigen::MatrixXcd JordanAlgebra::to_matrix(const CVecX& z) const {
  Eigen::MatrixXcd Z = Eigen::MatrixXcd::Zero(r_, r_);
  for (int i = 0; i < m_; ++i) Z += z[i] * realization_[i].cast<std::complex<double>>();
  return Z;
}

Vec JordanAlgebra::spectrum(const Vec& x) const {
  Eigen::SelfAdjointEigenSolver<Mat> es(to_matrix(x), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

bool in_cone(const JordanAlgebra& V, const Vec& x, double tol) {
  Vec s = V.spectrum(x);
  return s.minCoeff() > tol * std::max(1.0, s.cwiseAbs().maxCoeff());
}

int cone_boundary_rank(const JordanAlgebra& V, const Vec& x, double tol) {
  Vec s = V.spectrum(x);
  const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (std::abs(s[i]) > tol * scale) ++rank;
  return rank;
}

JordanFrame standard_frame(const JordanAlgebra& V) {
  JordanFrame f;
  for (int j = 0; j < V.rank(); ++j) {
    Mat E = Mat::Zero(V.rank(), V.rank());
    E(j, j) = 1.0;
    f.c.push_back(V.from_matrix(E));
  }
  return f;
}

FrameReport check_frame(const JordanAlgebra& V, const JordanFrame& f) {
  FrameReport rep;
  Vec sum = Vec::Zero(V.dim());
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    sum += f.c[i];
    rep.idempotent = std::max(rep.idempotent, (V.mul(f.c[i], f.c[i]) - f.c[i]).norm());
    for (std::size_t j = i + 1; j < f.c.size(); ++j)
      rep.orthogonal = std::max(rep.orthogonal, V.mul(f.c[i], f.c[j]).norm());
    Eigen::SelfAdjointEigenSolver<Mat> es(V.L(f.c[i]), Eigen::EigenvaluesOnly);
    int ones = 0;
    for (int k = 0; k < es.eigenvalues().size(); ++k)
      if (std::abs(es.eigenvalues()[k] - 1.0) < 1e-8) ++ones;
    if (ones != 1) rep.primitive = false;
  }
  rep.sum = (sum - V.unit()).norm();
  if (static_cast<int>(f.c.size()) != V.rank()) rep.primitive = false;
  return rep;
}

int PeirceBasis::block_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (blocks[b].first == i && blocks[b].second == j) return static_cast<int>(b);
  throw std::out_of_range("peirce: no such block");
}

int PeirceBasis::column(int i, int j, int alpha) const {
  const int b = block_index(i, j);
  if (alpha < 0 || alpha >= vectors[b].cols()) throw std::out_of_range("peirce: block index alpha out of range");
  int col = 0;
  for (int k = 0; k < b; ++k) col += static_cast<int>(vectors[k].cols());
  return col + alpha;
}

namespace {
Mat range_basis(const Mat& Q) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (Q + Q.transpose()));
  std::vector<int> keep;
  for (int k = 0; k < es.eigenvalues().size(); ++k)
    if (es.eigenvalues()[k] > 0.5) keep.push_back(k);
  Mat B(Q.rows(), static_cast<int>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    Vec v = es.eigenvectors().col(keep[c]);
    int imax;
    v.cwiseAbs().maxCoeff(&imax);
    if (v[imax] < 0.0) v = -v;
    B.col(static_cast<int>(c)) = v;
  }
  return B;
}
}  // namespace

PeirceBasis peirce(const JordanAlgebra& V, const JordanFrame& f) {
  if (!check_frame(V, f).ok(1e-10)) throw FrameInvalid("peirce: frame fails the idempotent tests");
  const int r = V.rank(), m = V.dim();
  const Mat I = Mat::Identity(m, m);
  std::vector<Mat> P1(r), Ph(r);
  for (int j = 0; j < r; ++j) {
    const Mat Lj = V.L(f.c[j]);
    P1[j] = Lj * (2.0 * Lj - I);
    Ph[j] = -4.0 * Lj * (Lj - I);
  }
  PeirceBasis P;
  P.r = r;
  P.frame = f;
  int total = 0;
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      Mat B = range_basis(i == j ? P1[i] : Mat(Ph[i] * Ph[j]));
      P.blocks.emplace_back(i, j);
      P.vectors.push_back(B);
      total += static_cast<int>(B.cols());
    }
  if (total != m) throw FrameInvalid("peirce: block dimensions do not add up");
  P.d = r >= 2 ? static_cast<int>(P.vectors[1].cols()) : 1;
  P.ordered.resize(m, m);
  int col = 0;
  for (const auto& B : P.vectors) {
    P.ordered.middleCols(col, B.cols()) = B;
    col += static_cast<int>(B.cols());
  }
  return P;
}

Vec peirce_project(const PeirceBasis& P, const Vec& x, int i, int j) {
  const Mat& B = P.vectors[P.block_index(i, j)];
  return B * (B.transpose() * x);
}

PeirceReport check_peirce(const JordanAlgebra& V, const PeirceBasis& P, const Vec& a_coeffs) {
  PeirceReport rep;
  Vec a = Vec::Zero(V.dim());
  for (int j = 0; j < P.r; ++j) a += a_coeffs[j] * P.frame.c[j];
  const Mat La = V.L(a);
  Mat sum = Mat::Zero(V.dim(), V.dim());
  for (std::size_t b = 0; b < P.blocks.size(); ++b) {
    const auto [i, j] = P.blocks[b];
    const Mat& B = P.vectors[b];
    const double w = 0.5 * (a_coeffs[i] + a_coeffs[j]);
    rep.eigen = std::max(rep.eigen, (La * B - w * B).cwiseAbs().maxCoeff());
    sum += B * B.transpose();
  }
  rep.completeness = (sum - Mat::Identity(V.dim(), V.dim())).cwiseAbs().maxCoeff();
  rep.orthonormality =
      (P.ordered.transpose() * P.ordered - Mat::Identity(V.dim(), V.dim())).cwiseAbs().maxCoeff();
  return rep;
}

}  // namespace huaharm::jordan
