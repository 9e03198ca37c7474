#include <cmath>

#include "huaharm/jordan.hpp"

namespace huaharm::jordan {

SpecialCoordinates::SpecialCoordinates(const SGroup& G) : G_(&G) {
  const int r = G.rank(), R = r - 1, d = G.peirce_basis().d;
  for (int j = 0; j < r; ++j)
    for (int k = j; k < r; ++k) {
      if (j == R && k == R) continue;
      for (int al = 0; al < (j == k ? 1 : d); ++al) ylab_.emplace_back(j, k, al);
    }
}

std::vector<std::string> SpecialCoordinates::labels() const {
  std::vector<std::string> out;
  const auto& V = G_->algebra();
  for (int i = 0; i < V.dim(); ++i) out.push_back("x_" + V.label(i));
  for (const auto& [j, k, al] : ylab_) {
    std::string s = "y_" + std::to_string(j + 1) + std::to_string(k + 1);
    if (G_->peirce_basis().d > 1 && j != k) s += "^" + std::to_string(al + 1);
    out.push_back(s);
  }
  return out;
}

SGroupElement SpecialCoordinates::element(const Vec& w) const {
  if (w.size() != size()) throw std::invalid_argument("special coordinates: wrong length");
  const int m = G_->dim(), r = G_->rank(), d = G_->peirce_basis().d;
  SGroupElement g = G_->identity();
  g.x = w.head(m);
  for (std::size_t i = 0; i < ylab_.size(); ++i) {
    const auto [j, k, al] = ylab_[i];
    const double v = w[m + static_cast<int>(i)];
    if (j == k) g.a[j] = v;
    else g.y[j][(k - j - 1) * d + al] = v;
  }
  (void)r;
  return g;
}

CVecX SpecialCoordinates::phi(const Vec& w) const {
  const auto& P = G_->peirce_basis();
  const Vec ecr = G_->algebra().unit() - P.frame.c[G_->rank() - 1];
  const SGroupElement g = element(w);
  const CVecX z = std::complex<double>(0.0, 1.0) * ecr.cast<std::complex<double>>();
  return G_->act(g, z);
}

CVecX SpecialCoordinates::big_phi(const Vec& w, double b) const {
  const Vec cr = G_->peirce_basis().frame.c[G_->rank() - 1];
  return phi(w) + std::complex<double>(0.0, b) * cr.cast<std::complex<double>>();
}

SpecialCoordinates::Jacobian SpecialCoordinates::phi_jacobian(const Vec& w, double h) const {
  const int m = G_->dim(), n = size();
  const auto& P = G_->peirce_basis();
  // rows: Re part in coordinates, then Im part in Peirce coordinates without the c_r row
  auto rows = [&](const CVecX& z) {
    Vec out(n);
    out.head(m) = z.real();
    for (std::size_t i = 0; i < ylab_.size(); ++i) {
      const auto [j, k, al] = ylab_[i];
      out[m + static_cast<int>(i)] = P.e(j, k, al).dot(Vec(z.imag()));
    }
    return out;
  };
  Jacobian J;
  J.minor.resize(n, n);
  for (int c = 0; c < n; ++c) {
    Vec wp = w, wm = w;
    wp[c] += h;
    wm[c] -= h;
    Vec wp2 = w, wm2 = w;
    wp2[c] += 2.0 * h;
    wm2[c] -= 2.0 * h;
    J.minor.col(c) = (8.0 * (rows(phi(wp)) - rows(phi(wm))) - (rows(phi(wp2)) - rows(phi(wm2)))) / (12.0 * h);
  }
  J.diagonal = J.minor.diagonal();
  J.expected = Vec::Ones(n);
  for (std::size_t i = 0; i < ylab_.size(); ++i) {
    const int j = std::get<0>(ylab_[i]);
    for (std::size_t p = 0; p < ylab_.size(); ++p)
      if (ylab_[p] == std::make_tuple(j, j, 0)) J.expected[m + static_cast<int>(i)] = std::exp(w[m + static_cast<int>(p)]);
  }
  for (int i = 0; i < n; ++i)
    for (int c = i + 1; c < n; ++c) J.off_triangle = std::max(J.off_triangle, std::abs(J.minor(i, c)));
  for (int i = 0; i < n; ++i)
    if (std::abs(J.diagonal[i]) < 1e-12) throw std::domain_error("phi_jacobian: singular diagonal entry");
  return J;
}

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::Interior: return "interior";
    case Membership::Boundary: return "boundary";
    default: return "exterior";
  }
}

Membership membership(const JordanAlgebra& V, const CVecX& z, double tol) {
  const Vec s = V.spectrum(Vec(z.imag()));
  const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
  if (s.minCoeff() > tol * scale) return Membership::Interior;
  if (s.minCoeff() >= -tol * scale) return Membership::Boundary;
  return Membership::Exterior;
}

}  // namespace huaharm::jordan
