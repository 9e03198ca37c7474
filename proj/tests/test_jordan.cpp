#include <random>

#include "doctest.h"
#include "huaharm/jordan.hpp"

using namespace huaharm::jordan;

namespace {

Vec random_vec(std::mt19937_64& rng, int m) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vec v(m);
  for (int i = 0; i < m; ++i) v[i] = u(rng);
  return v;
}

}  // namespace

TEST_CASE("matrix exponential agrees with the Taylor series") {
  Mat A(3, 3);
  A << 0.1, 0.5, -0.3, 0.2, -0.4, 0.7, 1.1, 0.0, 0.3;
  Mat term = Mat::Identity(3, 3), sum = term;
  for (int k = 1; k < 40; ++k) {
    term = term * A / k;
    sum += term;
  }
  CHECK((expm(A) - sum).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("Sym(r) is a Euclidean Jordan algebra on random triples") {
  std::mt19937_64 rng(0);
  for (int r : {2, 3}) {
    const auto V = JordanAlgebra::sym(r);
    CHECK(V.dim() == r * (r + 1) / 2);
    for (int t = 0; t < 10; ++t) {
      const Vec x = random_vec(rng, V.dim()), y = random_vec(rng, V.dim()), z = random_vec(rng, V.dim());
      // commutative, Jordan identity, associative inner product, matrix product form
      CHECK((V.mul(x, y) - V.mul(y, x)).norm() < 1e-13);
      const Vec x2 = V.mul(x, x);
      CHECK((V.mul(V.mul(x, y), x2) - V.mul(x, V.mul(y, x2))).norm() < 1e-12);
      CHECK(std::abs(V.inner(V.mul(x, y), z) - V.inner(y, V.mul(x, z))) < 1e-13);
      const Mat X = V.to_matrix(x), Y = V.to_matrix(y);
      CHECK((V.to_matrix(V.mul(x, y)) - 0.5 * (X * Y + Y * X)).norm() < 1e-13);
      CHECK((V.from_matrix(X) - x).norm() < 1e-14);
      CHECK((V.mul(V.unit(), x) - x).norm() < 1e-14);
    }
  }
}

TEST_CASE("cone membership follows the spectrum") {
  const auto V = JordanAlgebra::sym(2);
  CHECK(in_cone(V, V.unit()));
  Mat B(2, 2);
  B << 1.0, 0.0, 0.0, -0.5;
  CHECK_FALSE(in_cone(V, V.from_matrix(B)));
  B << 1.0, 0.0, 0.0, 0.0;
  CHECK(cone_boundary_rank(V, V.from_matrix(B)) == 1);
}

TEST_CASE("frame and Peirce decomposition") {
  for (int r : {2, 3}) {
    const auto V = JordanAlgebra::sym(r);
    const auto F = standard_frame(V);
    CHECK(check_frame(V, F).ok(1e-12));
    const auto P = peirce(V, F);
    CHECK(P.blocks.size() == static_cast<std::size_t>(r * (r + 1) / 2));
    const auto pr = check_peirce(V, P, Vec::LinSpaced(r, 0.3, 1.7));
    CHECK(pr.eigen < 1e-12);
    CHECK(pr.completeness < 1e-12);
    CHECK(pr.orthonormality < 1e-12);
  }
  // a non-frame is rejected
  const auto V = JordanAlgebra::sym(2);
  JordanFrame bad{{V.unit(), V.unit()}};
  CHECK_THROWS_AS(peirce(V, bad), FrameInvalid);
}

TEST_CASE("group S: composition, refactoring, section and split") {
  std::mt19937_64 rng(3);
  for (int r : {2, 3}) {
    const auto V = JordanAlgebra::sym(r);
    const auto P = peirce(V, standard_frame(V));
    const SGroup G(V, P);
    for (int t = 0; t < 10; ++t) {
      const auto g = G.random(rng, 0.8), h = G.random(rng, 0.8);
      CHECK((G.affine(G.compose(g, h)) - G.affine(g) * G.affine(h)).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((G.affine(G.compose(g, G.inverse(g))) - Mat::Identity(V.dim() + 1, V.dim() + 1)).cwiseAbs().maxCoeff() <
            1e-12);
      CHECK(G.triangularity_deviation(G.linear(g)) < 1e-12);
      const auto z = G.act(g, G.ie());
      CHECK((G.affine(G.section(z)) - G.affine(g)).cwiseAbs().maxCoeff() < 1e-10);
      const auto [sm, sp] = G.split(g);
      CHECK((G.affine(G.compose(sm, sp)) - G.affine(g)).cwiseAbs().maxCoeff() < 1e-12);
      // the S^+ factor only moves coordinates that involve the last index
      CHECK(sm.a[r - 1] == doctest::Approx(0.0));
    }
    CHECK(adjoint_weight_check(G).max() < 1e-10);
    if (r >= 2) CHECK(splus_brackets(G).max_dev < 1e-10);
  }
}

TEST_CASE("special coordinates: triangular Jacobian and boundary membership") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  const auto V = JordanAlgebra::sym(2);
  const auto P = peirce(V, standard_frame(V));
  const SGroup G(V, P);
  const SpecialCoordinates S(G);
  CHECK(S.size() == 2 * V.dim() - 1);
  Vec w(S.size());
  for (int i = 0; i < w.size(); ++i) w[i] = u(rng);
  const auto J = S.phi_jacobian(w);
  CHECK((J.diagonal - J.expected).cwiseAbs().maxCoeff() < 1e-6);
  CHECK(J.off_triangle < 1e-6);
  CHECK(membership(V, S.phi(w)) == Membership::Boundary);
  CHECK(membership(V, S.big_phi(w, 0.3)) == Membership::Interior);
  CHECK(membership(V, S.big_phi(w, -0.3)) == Membership::Exterior);
}
