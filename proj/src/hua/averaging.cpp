#include <cmath>

#include "huaharm/hua.hpp"
#include "huaharm/quadrature.hpp"

namespace huaharm::hua {

namespace {
struct MinusLayout {
  std::vector<Vec> x_dirs;                      // Peirce vectors of V_ij, i <= j < r-1
  std::vector<std::pair<int, int>> y_slots;     // (block j, entry) with k < r-1
  int R = 0;
  int size() const { return static_cast<int>(x_dirs.size() + y_slots.size()) + R; }
};

MinusLayout layout(const HuaContext& C) {
  MinusLayout L;
  const auto& P = C.group().peirce_basis();
  const int r = C.rank(), d = P.d;
  L.R = r - 1;
  for (std::size_t b = 0; b < P.blocks.size(); ++b)
    if (P.blocks[b].second < L.R)
      for (int al = 0; al < P.vectors[b].cols(); ++al) L.x_dirs.push_back(P.vectors[b].col(al));
  for (int j = 0; j + 1 < r; ++j)
    for (int k = j + 1; k < L.R; ++k)
      for (int al = 0; al < d; ++al) L.y_slots.emplace_back(j, (k - j - 1) * d + al);
  return L;
}
}  // namespace

int s_minus_dim(const HuaContext& C) { return layout(C).size(); }

SGroupElement s_minus_element(const HuaContext& C, const Vec& c) {
  const MinusLayout L = layout(C);
  if (c.size() != L.size()) throw std::invalid_argument("s_minus_element: wrong coordinate count");
  SGroupElement g = C.group().identity();
  int i = 0;
  for (const auto& v : L.x_dirs) g.x += c[i++] * v;
  for (const auto& [j, e] : L.y_slots) g.y[j][e] = c[i++];
  for (int j = 0; j < L.R; ++j) g.a[j] = c[i++];
  return g;
}

GFunc g_psi_average(const HuaContext& C, const DFunc& F, const SMinusWeight& w, int nodes_per_dim) {
  if (!w.psi) throw std::invalid_argument("g_psi_average: missing weight");
  const int D = s_minus_dim(C);
  const double hw = w.half_width;
  // the weight has to vanish where the grid stops
  const double centre = std::abs(w.psi(Vec::Zero(D)));
  for (int dim = 0; dim < D; ++dim)
    for (double sgn : {-1.0, 1.0}) {
      Vec f = Vec::Zero(D);
      f[dim] = sgn * hw;
      if (std::abs(w.psi(f)) > 1e-10 * std::max(centre, 1e-300))
        throw std::domain_error("g_psi_average: weight not covered by the quadrature grid");
    }
  const auto& gl = cached_legendre(nodes_per_dim);
  std::vector<Mat> elems;
  std::vector<double> weights;
  std::vector<int> idx(D, 0);
  for (;;) {
    Vec c(D);
    double wt = 1.0;
    for (int i = 0; i < D; ++i) {
      c[i] = hw * gl.nodes[idx[i]];
      wt *= hw * gl.weights[idx[i]];
    }
    const double v = wt * w.psi(c);
    if (v != 0.0) {
      elems.push_back(C.affine(s_minus_element(C, c)));
      weights.push_back(v);
    }
    int i = 0;
    while (i < D && ++idx[i] == nodes_per_dim) idx[i++] = 0;
    if (i == D) break;
  }
  return [&C, F, elems = std::move(elems), weights = std::move(weights)](const Mat& sp) {
    cplx acc = 0.0;
    for (std::size_t q = 0; q < elems.size(); ++q) acc += weights[q] * F(C.point(elems[q] * sp));
    return acc;
  };
}

int cond1_max_order(const HuaContext& C) {
  const int r = C.rank(), d = C.group().peirce_basis().d;
  return ((r - 1) * d + 1) / 2 + 1;
}

CVecX permute_point(const jordan::JordanAlgebra& V, const CVecX& z, const std::vector<int>& perm) {
  if (perm.empty()) return z;
  if (static_cast<int>(perm.size()) != V.rank()) throw std::invalid_argument("permutation length must equal the rank");
  const Mat X = V.to_matrix(Vec(z.real())), Y = V.to_matrix(Vec(z.imag()));
  Mat Xp(X.rows(), X.cols()), Yp(Y.rows(), Y.cols());
  for (int a = 0; a < X.rows(); ++a)
    for (int b = 0; b < X.cols(); ++b) {
      Xp(a, b) = X(perm[a], perm[b]);
      Yp(a, b) = Y(perm[a], perm[b]);
    }
  return V.from_matrix(Xp).cast<cplx>() + cplx(0.0, 1.0) * V.from_matrix(Yp).cast<cplx>();
}

cplx cond1_probe(const HuaContext& C, const DFunc& F, int p, double b, const Cond1Options& opt) {
  if (p < 0 || p > cond1_max_order(C)) throw std::out_of_range("cond1_probe: order outside the admissible range");
  if (p > 2) throw std::invalid_argument("cond1_probe: orders above 2 are not implemented");
  if (!(b > 0.0 && b < 1.0)) throw std::domain_error("cond1_probe: b must lie in (0, 1)");
  jordan::SpecialCoordinates S(C.group());
  const int D = S.size();
  const auto& gh = cached_hermite(opt.nodes_per_dim);
  const double sc = std::sqrt(2.0) * opt.sigma;
  std::vector<Vec> nodes;
  std::vector<double> weights;
  std::vector<int> idx(D, 0);
  for (;;) {
    Vec w(D);
    double wt = 1.0;
    for (int i = 0; i < D; ++i) {
      w[i] = sc * gh.nodes[idx[i]];
      wt *= sc * gh.weights[idx[i]];
    }
    nodes.push_back(w);
    weights.push_back(wt);
    int i = 0;
    while (i < D && ++idx[i] == opt.nodes_per_dim) idx[i++] = 0;
    if (i == D) break;
  }
  auto I = [&](double bb) {
    cplx acc = 0.0;
    for (std::size_t q = 0; q < nodes.size(); ++q)
      acc += weights[q] * F(permute_point(C.algebra(), S.big_phi(nodes[q], bb), opt.permutation));
    return acc;
  };
  if (p == 0) return I(b);
  const FdSpec fd{std::min(1e-2, 0.25 * b), 2};
  return richardson([&](double t) { return I(b + t); }, p, fd);
}

}  // namespace huaharm::hua
