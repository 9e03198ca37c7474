#include <cmath>
#include <stdexcept>

#include "huaharm/heisenberg.hpp"

namespace huaharm {

cplx richardson(const std::function<cplx(double)>& g, int order, const FdSpec& fd) {
  if (!(fd.h > 0.0) || fd.levels < 0) throw std::invalid_argument("richardson: bad step");
  const int L = fd.levels;
  std::vector<std::vector<cplx>> R(L + 1);
  const cplx g0 = order == 2 ? g(0.0) : cplx(0.0);
  double h = fd.h;
  for (int i = 0; i <= L; ++i, h *= 0.5) {
    cplx d = order == 1 ? (g(h) - g(-h)) / (2.0 * h) : (g(h) - 2.0 * g0 + g(-h)) / (h * h);
    R[0].push_back(d);
  }
  for (int l = 1; l <= L; ++l) {
    const double f = std::pow(4.0, l);
    for (int i = 0; i + l <= L; ++i) R[l].push_back((f * R[l - 1][i + 1] - R[l - 1][i]) / (f - 1.0));
  }
  return R[L][0];
}

namespace {

const cplx I(0.0, 1.0);

void check_index(const FieldId& f, std::size_t n) {
  if (f.j < 0 || static_cast<std::size_t>(f.j) >= n) throw std::out_of_range("field index out of range");
}

HPoint curve_h(FieldTag tag, int j, const HPoint& p, double s) {
  HPoint q = hn_identity(p.dim());
  switch (tag) {
    case FieldTag::X: q.zeta[j] = s; break;
    case FieldTag::Y: q.zeta[j] = cplx(0.0, s); break;
    case FieldTag::T: q.t = s; break;
    default: throw std::invalid_argument("field has no curve on H^n");
  }
  return hn_mul(p, q);
}

SPoint curve_s(FieldTag tag, int j, const SPoint& p, double s) {
  switch (tag) {
    case FieldTag::X:
    case FieldTag::Y:
    case FieldTag::T: {
      HPoint b = curve_h(tag, j, p.base(), s);
      return {b.zeta, b.t, p.a};
    }
    case FieldTag::ADa: return {p.zeta, p.t, p.a * std::exp(s)};
    case FieldTag::Da: return {p.zeta, p.t, p.a + s};
    default: throw std::invalid_argument("field has no single curve");
  }
}

bool real_tag(FieldTag t) {
  return t == FieldTag::X || t == FieldTag::Y || t == FieldTag::T || t == FieldTag::ADa || t == FieldTag::Da;
}

FdSpec scaled(const FieldId& f, const SPoint& p) {
  FdSpec fd = f.fd;
  if (f.tag == FieldTag::Da || f.tag == FieldTag::Znp1 || f.tag == FieldTag::Zbarnp1) {
    if (!(p.a > 0.0)) throw std::domain_error("S field: a must be positive");
    fd.h *= std::min(1.0, p.a);
    if (p.a - fd.h <= 0.0) throw std::domain_error("S field: stencil leaves a > 0");
  }
  return fd;
}

}  // namespace

cplx apply_field(const FieldId& f, const HFunc& fn, const HPoint& p) {
  switch (f.tag) {
    case FieldTag::Z:
    case FieldTag::Zbar: {
      const double sg = f.tag == FieldTag::Z ? -1.0 : 1.0;
      FieldId x{FieldTag::X, f.j, f.fd}, y{FieldTag::Y, f.j, f.fd};
      return 0.5 * (apply_field(x, fn, p) + sg * I * apply_field(y, fn, p));
    }
    case FieldTag::X:
    case FieldTag::Y:
      check_index(f, p.dim());
      [[fallthrough]];
    case FieldTag::T:
      return richardson([&](double s) { return fn(curve_h(f.tag, f.j, p, s)); }, 1, f.fd);
    default: throw std::invalid_argument("apply_field: field is not defined on H^n");
  }
}

cplx apply_field(const FieldId& f, const SFunc& fn, const SPoint& p) {
  if (!(p.a > 0.0)) throw std::domain_error("S field: a must be positive");
  switch (f.tag) {
    case FieldTag::Z:
    case FieldTag::Zbar: {
      const double sg = f.tag == FieldTag::Z ? -1.0 : 1.0;
      FieldId x{FieldTag::X, f.j, f.fd}, y{FieldTag::Y, f.j, f.fd};
      return 0.5 * (apply_field(x, fn, p) + sg * I * apply_field(y, fn, p));
    }
    case FieldTag::Znp1:
    case FieldTag::Zbarnp1: {
      const double sg = f.tag == FieldTag::Znp1 ? -1.0 : 1.0;
      FieldId t{FieldTag::T, 0, f.fd}, da{FieldTag::Da, 0, f.fd};
      return 0.5 * (apply_field(t, fn, p) + sg * I * apply_field(da, fn, p));
    }
    case FieldTag::X:
    case FieldTag::Y: check_index(f, p.dim()); [[fallthrough]];
    default: {
      FdSpec fd = scaled(f, p);
      return richardson([&](double s) { return fn(curve_s(f.tag, f.j, p, s)); }, 1, fd);
    }
  }
}

cplx apply_field2(const FieldId& f, const HFunc& fn, const HPoint& p) {
  if (!real_tag(f.tag)) throw std::invalid_argument("apply_field2: complex fields compose, use field_fn");
  if (f.tag != FieldTag::T) check_index(f, p.dim());
  return richardson([&](double s) { return fn(curve_h(f.tag, f.j, p, s)); }, 2, f.fd);
}

cplx apply_field2(const FieldId& f, const SFunc& fn, const SPoint& p) {
  if (!real_tag(f.tag)) throw std::invalid_argument("apply_field2: complex fields compose, use field_fn");
  if (f.tag == FieldTag::X || f.tag == FieldTag::Y) check_index(f, p.dim());
  FdSpec fd = scaled(f, p);
  return richardson([&](double s) { return fn(curve_s(f.tag, f.j, p, s)); }, 2, fd);
}

HFunc field_fn(const FieldId& field, HFunc f) {
  return [field, f](const HPoint& p) { return apply_field(field, f, p); };
}

SFunc field_fn(const FieldId& field, SFunc f) {
  return [field, f](const SPoint& p) { return apply_field(field, f, p); };
}

cplx op_calL_alpha(double alpha, const HFunc& f, const HPoint& p, const FdSpec& fd) {
  cplx s = 0.0;
  for (std::size_t j = 0; j < p.dim(); ++j) {
    s += apply_field2({FieldTag::X, int(j), fd}, f, p);
    s += apply_field2({FieldTag::Y, int(j), fd}, f, p);
  }
  cplx out = -0.25 * s;
  if (alpha != 0.0) out += I * alpha * apply_field({FieldTag::T, 0, fd}, f, p);
  return out;
}

cplx op_calL_alpha(double alpha, const SFunc& f, const SPoint& p, const FdSpec& fd) {
  cplx s = 0.0;
  for (std::size_t j = 0; j < p.dim(); ++j) {
    s += apply_field2({FieldTag::X, int(j), fd}, f, p);
    s += apply_field2({FieldTag::Y, int(j), fd}, f, p);
  }
  cplx out = -0.25 * s;
  if (alpha != 0.0) out += I * alpha * apply_field({FieldTag::T, 0, fd}, f, p);
  return out;
}

HFunc calL_fn(double alpha, HFunc f, const FdSpec& fd) {
  return [alpha, f, fd](const HPoint& p) { return op_calL_alpha(alpha, f, p, fd); };
}

cplx op_L_alpha(double alpha, const SFunc& F, const SPoint& p, const FdSpec& fd) {
  const double n = static_cast<double>(p.dim());
  const double a = p.a;
  cplx L0 = op_calL_alpha(0.0, F, p, fd);
  cplx da = apply_field({FieldTag::Da, 0, fd}, F, p);
  cplx daa = apply_field2({FieldTag::Da, 0, fd}, F, p);
  cplx tt = apply_field2({FieldTag::T, 0, fd}, F, p);
  return -alpha * a * (L0 + n * da) + a * a * (daa + tt);
}

BoundaryResiduals boundary_residuals(const HFunc& f, const HPoint& p, const FdSpec& fd) {
  BoundaryResiduals r;
  const double n = static_cast<double>(p.dim());
  for (std::size_t j = 0; j < p.dim(); ++j)
    r.cr = std::max(r.cr, std::abs(apply_field({FieldTag::Zbar, int(j), fd}, f, p)));
  r.hol = op_calL_alpha(n, f, p, fd);
  r.antihol = op_calL_alpha(-n, f, p, fd);
  // fourth order: a wider step keeps nested rounding in check
  FdSpec wide{std::max(fd.h, 1e-2), fd.levels};
  HFunc inner = calL_fn(0.0, f, wide);
  r.pluri = op_calL_alpha(0.0, inner, p, wide) + n * n * apply_field2({FieldTag::T, 0, wide}, f, p);
  return r;
}

}  // namespace huaharm
