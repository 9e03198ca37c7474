#include <cmath>
#include <random>

#include "doctest.h"
#include "huaharm/heisenberg.hpp"
#include "oracles.hpp"

using namespace huaharm;

namespace {

HPoint random_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  HPoint p{CVec(n), u(rng)};
  for (auto& z : p.zeta) z = cplx(u(rng), u(rng));
  return p;
}

double dist(const HPoint& a, const HPoint& b) {
  double d = std::abs(a.t - b.t);
  for (std::size_t j = 0; j < a.dim(); ++j) d = std::max(d, std::abs(a.zeta[j] - b.zeta[j]));
  return d;
}

oracle::HP to_oracle(const HPoint& p) { return {p.zeta, p.t}; }
HPoint from_oracle(const oracle::HP& p) { return {p.z, p.t}; }

}  // namespace

TEST_CASE("group law matches the reference and is associative") {
  std::mt19937_64 rng(0);
  for (int i = 0; i < 20; ++i) {
    const auto p = random_point(rng, 2), q = random_point(rng, 2), r = random_point(rng, 2);
    CHECK(dist(hn_mul(p, q), from_oracle(oracle::hmul(to_oracle(p), to_oracle(q)))) < 1e-14);
    CHECK(dist(hn_mul(hn_mul(p, q), r), hn_mul(p, hn_mul(q, r))) < 1e-13);
    CHECK(dist(hn_mul(p, hn_inv(p)), hn_identity(2)) < 1e-14);
  }
}

TEST_CASE("the affine group S is a group acting on the Siegel domain") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.2, 2.0);
  for (int i = 0; i < 10; ++i) {
    const auto b1 = random_point(rng, 2), b2 = random_point(rng, 2), b3 = random_point(rng, 2);
    const SPoint p{b1.zeta, b1.t, u(rng)}, q{b2.zeta, b2.t, u(rng)}, r{b3.zeta, b3.t, u(rng)};
    const auto lhs = s_mul(s_mul(p, q), r), rhs = s_mul(p, s_mul(q, r));
    CHECK(dist(lhs.base(), rhs.base()) < 1e-13);
    CHECK(lhs.a == doctest::Approx(rhs.a));
    // p . (q . i) = (pq) . i
    const auto z1 = s_act(p, to_siegel(q)), z2 = to_siegel(s_mul(p, q));
    for (std::size_t j = 0; j < z1.z.size(); ++j) CHECK(std::abs(z1.z[j] - z2.z[j]) < 1e-12);
    const auto back = from_siegel(to_siegel(p));
    CHECK(dist(back.base(), p.base()) < 1e-13);
    CHECK(back.a == doctest::Approx(p.a));
    CHECK(to_siegel(p).r() == doctest::Approx(p.a));
  }
}

TEST_CASE("e_kappa^lambda is an eigenfunction of the sublaplacian") {
  for (double lam : {0.5, -1.0, 2.0})
    for (int kap = 0; kap <= 4; ++kap) {
      auto f = [&](const oracle::HP& p) { return e_kappa_lambda(lam, kap, from_oracle(p)); };
      const oracle::HP w{{cplx(0.25, 0.1)}, 0.3};
      const cplx e = f(w);
      CHECK(std::abs(oracle::sublaplacian(f, w) - (2.0 * kap + 1.0) * std::abs(lam) * e) < 1e-6);
      CHECK(std::abs(oracle::t_derivative(f, w, 2) + lam * lam * e) < 1e-6);
      // the library operator agrees with the reference one
      HFunc g = [&](const HPoint& p) { return e_kappa_lambda(lam, kap, p); };
      CHECK(std::abs(op_calL_alpha(0.0, g, from_oracle(w)) - oracle::sublaplacian(f, w)) < 1e-5);
    }
}

TEST_CASE("diagonal coefficients: quadrature and the Laguerre fast path agree") {
  for (double lam : {0.5, 1.0, 2.0})
    for (int k = 0; k <= 5; ++k) {
      const HPoint w{{cplx(0.3, -0.4)}, 0.6};
      CHECK(std::abs(rep_coeff(lam, {k}, {k}, w) - rep_coeff_diag_fast(lam, {k}, w)) < 1e-8);
    }
}

TEST_CASE("classical and spectral labels differ by 2/pi") {
  CHECK(classical_lambda(1.0, RepConvention::Spectral) == doctest::Approx(2.0 / M_PI));
  CHECK(classical_lambda(1.0, RepConvention::Classical) == 1.0);
  const HPoint w{{cplx(0.2, 0.1)}, 0.5};
  CHECK(std::abs(e_kappa_lambda(1.0, 2, w, RepConvention::Spectral) -
                 e_kappa_lambda(2.0 / M_PI, 2, w, RepConvention::Classical)) < 1e-12);
}

TEST_CASE("Laguerre shell sums equal the brute-force sums") {
  const std::vector<double> s{0.3, 1.1};
  const auto shells = laguerre_shell_sums(s, 6);
  for (int kap = 0; kap <= 6; ++kap) {
    double brute = 0.0;
    for (int a = 0; a <= kap; ++a) brute += oracle::laguerre(a, 0.0, s[0]) * oracle::laguerre(kap - a, 0.0, s[1]);
    CHECK(shells[kap] == doctest::Approx(brute).epsilon(1e-12));
  }
}

TEST_CASE("e_kappa^lambda: closed form against quadrature") {
  for (double lam : {0.5, 1.0})
    for (int kap = 0; kap <= 3; ++kap) {
      const HPoint w{{cplx(0.3, -0.2)}, 0.7};
      CHECK(std::abs(e_kappa_lambda(lam, kap, w) - e_kappa_lambda_quadrature(lam, kap, w)) < 1e-8);
    }
}

TEST_CASE("the Cauchy kernel is a CR function and the log kernel is conjugation symmetric") {
  const HPoint w{{cplx(0.4, 0.3)}, 0.7};
  const auto br = boundary_residuals(cauchy_kernel, w);
  CHECK(br.cr < 1e-6 * std::abs(cauchy_kernel(w)));
  const HPoint w2{{cplx(0.4, 0.3)}, -0.7};
  CHECK(std::abs(log_kernel(w2) - std::conj(log_kernel(w))) < 1e-14);
  CHECK_THROWS(cauchy_kernel(hn_identity(1)));
}

TEST_CASE("truncated Fourier inversion converges") {
  PartialFT F3 = [](const CVec& xi, double lam) {
    return cplx(std::sqrt(M_PI) * std::exp(-lam * lam / 4) * std::exp(-norm2(xi)));
  };
  const auto psi = smooth_bump(0.2, 1.5);
  const HPoint w{{cplx(0.3, 0.2)}, 0.5};
  const auto terms = inversion_terms(F3, psi, 8, w);
  const cplx target = inversion_target(F3, psi, w);
  cplx s = 0.0;
  double prev = INFINITY;
  for (int k = 0; k <= 8; ++k) {
    s += terms[k];
    const double res = std::abs(s - target);
    CHECK(res < prev);
    prev = res;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("L_alpha annihilates e_kappa^lambda times the radial profile") {
  for (double al : {0.5, 1.0})
    for (int kap = 0; kap <= 3; ++kap) {
      const double lam = 0.7;
      BoundedHyperSolution g(al, 2 * al * kap);
      SFunc F = [&](const SPoint& p) { return e_kappa_lambda(lam, kap, p.base()) * g.evaluate(std::abs(lam) * p.a); };
      CHECK(std::abs(op_L_alpha(al, F, SPoint{{cplx(0.2, -0.1)}, 0.4, 0.8})) < 1e-4);
    }
}
