#include <cmath>
#include <stdexcept>

#include "huaharm/heisenberg.hpp"

namespace huaharm {

namespace {
void same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("heisenberg: dimension mismatch");
}
}  // namespace

double SiegelPoint::r() const {
  if (z.empty()) throw std::invalid_argument("SiegelPoint: empty");
  double s = 0.0;
  for (std::size_t j = 0; j + 1 < z.size(); ++j) s += std::norm(z[j]);
  return z.back().imag() - s;
}

double norm2(const CVec& z) {
  double s = 0.0;
  for (const auto& v : z) s += std::norm(v);
  return s;
}

cplx hdot(const CVec& a, const CVec& b) {
  same_dim(a.size(), b.size());
  cplx s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * std::conj(b[j]);
  return s;
}

HPoint hn_identity(std::size_t n) { return {CVec(n, 0.0), 0.0}; }

HPoint hn_mul(const HPoint& p, const HPoint& q) {
  same_dim(p.dim(), q.dim());
  HPoint r{p.zeta, p.t + q.t + 2.0 * hdot(p.zeta, q.zeta).imag()};
  for (std::size_t j = 0; j < r.zeta.size(); ++j) r.zeta[j] += q.zeta[j];
  return r;
}

HPoint hn_inv(const HPoint& p) {
  HPoint r{p.zeta, -p.t};
  for (auto& v : r.zeta) v = -v;
  return r;
}

SPoint s_identity(std::size_t n) { return {CVec(n, 0.0), 0.0, 1.0}; }

// The twist uses Im(zeta . conj(eta)), the sign that makes the law agree with the action on U^n.
SPoint s_mul(const SPoint& p, const SPoint& q) {
  same_dim(p.dim(), q.dim());
  const double sa = std::sqrt(p.a);
  SPoint r{p.zeta, p.t + p.a * q.t + 2.0 * sa * hdot(p.zeta, q.zeta).imag(), p.a * q.a};
  for (std::size_t j = 0; j < r.zeta.size(); ++j) r.zeta[j] += sa * q.zeta[j];
  return r;
}

SPoint s_inv(const SPoint& p) {
  const double ia = 1.0 / p.a, isa = std::sqrt(ia);
  SPoint r{p.zeta, -p.t * ia, ia};
  for (auto& v : r.zeta) v = -isa * v;
  return r;
}

SiegelPoint s_act(const SPoint& p, const SiegelPoint& z) {
  same_dim(p.dim(), z.dim());
  const std::size_t n = p.dim();
  const double sa = std::sqrt(p.a);
  SiegelPoint out;
  out.z.resize(n + 1);
  CVec zp(z.z.begin(), z.z.begin() + n);
  for (std::size_t j = 0; j < n; ++j) out.z[j] = p.zeta[j] + sa * zp[j];
  const cplx I(0.0, 1.0);
  out.z[n] = p.t + p.a * z.z[n] + 2.0 * I * sa * hdot(zp, p.zeta) + I * norm2(p.zeta);
  return out;
}

SiegelPoint dilate(double delta, const SiegelPoint& z) {
  if (!(delta > 0.0)) throw std::invalid_argument("dilate: delta must be positive");
  SiegelPoint out = z;
  for (std::size_t j = 0; j + 1 < out.z.size(); ++j) out.z[j] *= delta;
  out.z.back() *= delta * delta;
  return out;
}

SiegelPoint to_siegel(const SPoint& p) {
  SiegelPoint o;
  o.z.assign(p.dim() + 1, 0.0);
  o.z.back() = cplx(0.0, 1.0);
  return s_act(p, o);
}

SPoint from_siegel(const SiegelPoint& z) {
  const double r = z.r();
  if (!(r > 0.0)) throw std::domain_error("from_siegel: point is not interior");
  const std::size_t n = z.dim();
  return {CVec(z.z.begin(), z.z.begin() + n), z.z[n].real(), r};
}

}  // namespace huaharm
