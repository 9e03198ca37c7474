#pragma once

#include <Eigen/Dense>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace huaharm::jordan {

using Vec = Eigen::VectorXd;
using CVecX = Eigen::VectorXcd;
using Mat = Eigen::MatrixXd;

struct FrameInvalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RefactorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scaling and squaring with a [6/6] Pade approximant.
Mat expm(const Mat& A);

// Euclidean Jordan algebra on an orthonormal coordinate basis, given by its product table.
// The Sym(r) instance also keeps its matrix realization for spectral questions.
class JordanAlgebra {
 public:
  static JordanAlgebra sym(int r);

  int dim() const { return m_; }
  int rank() const { return r_; }
  int d() const { return d_; }
  Vec unit() const { return e_; }
  Vec basis(int i) const;
  const std::string& label(int i) const { return labels_[i]; }

  Vec mul(const Vec& x, const Vec& y) const { return L(x) * y; }
  double inner(const Vec& x, const Vec& y) const { return x.dot(y); }
  Mat L(const Vec& x) const;
  // x box y = L(xy) + [L(x), L(y)]
  Mat box(const Vec& x, const Vec& y) const;

  Mat to_matrix(const Vec& x) const;
  Vec from_matrix(const Mat& X) const;
  Eigen::MatrixXcd to_matrix(const CVecX& z) const;
  // eigenvalues of x, ascending
  Vec spectrum(const Vec& x) const;

 private:
  int m_ = 0, r_ = 0, d_ = 1;
  Vec e_;
  std::vector<Mat> table_;  // table_[i] = L(basis i)
  std::vector<Mat> realization_;
  std::vector<std::string> labels_;
};

bool in_cone(const JordanAlgebra& V, const Vec& x, double tol = 1e-12);
int cone_boundary_rank(const JordanAlgebra& V, const Vec& x, double tol = 1e-10);

struct JordanFrame {
  std::vector<Vec> c;
};
JordanFrame standard_frame(const JordanAlgebra& V);

struct FrameReport {
  double idempotent = 0.0;  // max |c_i c_i - c_i|
  double orthogonal = 0.0;  // max |c_i c_j|
  double sum = 0.0;         // |sum c_i - e|
  bool primitive = true;    // each L(c_i) has a one-dimensional 1-eigenspace
  bool ok(double tol = 1e-12) const { return idempotent <= tol && orthogonal <= tol && sum <= tol && primitive; }
};
FrameReport check_frame(const JordanAlgebra& V, const JordanFrame& f);

// Peirce spaces V_ij (i <= j, zero-based) in lexicographic order.
struct PeirceBasis {
  int r = 0, d = 1;
  std::vector<std::pair<int, int>> blocks;
  std::vector<Mat> vectors;  // orthonormal columns of each block
  Mat ordered;               // all columns, block by block
  JordanFrame frame;
  int block_index(int i, int j) const;
  int column(int i, int j, int alpha = 0) const;
  Vec e(int i, int j, int alpha = 0) const { return ordered.col(column(i, j, alpha)); }
};
PeirceBasis peirce(const JordanAlgebra& V, const JordanFrame& f);
Vec peirce_project(const PeirceBasis& P, const Vec& x, int i, int j);

struct PeirceReport {
  double eigen = 0.0;         // max |L(a)x - (a_i+a_j)/2 x| over block vectors
  double completeness = 0.0;  // |sum of block projectors - I|
  double orthonormality = 0.0;
};
PeirceReport check_peirce(const JordanAlgebra& V, const PeirceBasis& P, const Vec& a_coeffs);

// g = (x, y, a): z -> x + tau(y^1)...tau(y^{r-1}) exp(sum a_j L(c_j)) z.
// y[j] holds the coefficients of y^{j+1} on e_{jk}^alpha, k > j, in lexicographic order.
struct SGroupElement {
  Vec x;
  std::vector<Vec> y;
  Vec a;
};

class SGroup {
 public:
  SGroup(const JordanAlgebra& V, const PeirceBasis& P);
  const JordanAlgebra& algebra() const { return *V_; }
  const PeirceBasis& peirce_basis() const { return P_; }
  int dim() const { return V_->dim(); }
  int rank() const { return V_->rank(); }

  SGroupElement identity() const;
  SGroupElement random(std::mt19937_64& rng, double scale = 0.5) const;

  Mat tau(int j, const Vec& yj) const;
  Mat a_part(const Vec& a) const;
  Mat n_part(const std::vector<Vec>& y) const;
  Mat linear(const SGroupElement& g) const;
  // (m+1) x (m+1) augmented matrix [[linear, x], [0, 1]]
  Mat affine(const SGroupElement& g) const;
  SGroupElement from_affine(const Mat& A) const;
  SGroupElement decompose_linear(const Mat& M) const;  // x left at zero

  SGroupElement compose(const SGroupElement& g, const SGroupElement& h) const;
  SGroupElement inverse(const SGroupElement& g) const;
  CVecX act(const SGroupElement& g, const CVecX& z) const;
  CVecX act_affine(const Mat& A, const CVecX& z) const;
  CVecX ie() const;

  // The unique s with s . ie = z (z in the tube over the cone).
  SGroupElement section(const CVecX& z) const;

  // g = s_minus s_plus, s_minus in N^- A^- (indices < r), s_plus in N^+ A^+.
  std::pair<SGroupElement, SGroupElement> split(const SGroupElement& g) const;

  // Lie algebra elements as augmented matrices.
  Mat lie_translation(const Vec& v) const;
  Mat lie_X(int j) const;  // translation by c_j
  Mat lie_H(int j) const;  // L(c_j)
  Mat lie_Xjk(int j, int k, int alpha = 0) const;
  Mat lie_Yjk(int j, int k, int alpha = 0) const;  // 2 e_jk box c_j

  // Below-diagonal modulus of the linear part in the ordered Peirce basis (upper triangle must vanish).
  double triangularity_deviation(const Mat& linear_part) const;

 private:
  const JordanAlgebra* V_;
  PeirceBasis P_;
};

struct WeightReport {
  double v_dev = 0.0;  // [H, X] = (l_i + l_j)/2 X on V_ij
  double n_dev = 0.0;  // [H, N] = (l_j - l_i)/2 N on N_ij
  double max() const { return std::max(v_dev, n_dev); }
};
WeightReport adjoint_weight_check(const SGroup& G);

struct BracketReport {
  double max_dev = 0.0;
  std::vector<std::pair<std::string, double>> entries;
};
// Heisenberg relations inside s^+: [Y_jr, X_jr] = X_r, [H_r, X_r] = X_r, [H_r, X_jr] = X_jr / 2, the rest of n^+ abelian.
BracketReport splus_brackets(const SGroup& G);

// Special coordinates w = (x, y_11, y^1, ..., y_{r-1,r-1}, y^{r-1}), 2m - 1 reals.
class SpecialCoordinates {
 public:
  explicit SpecialCoordinates(const SGroup& G);
  int size() const { return 2 * G_->dim() - 1; }
  SGroupElement element(const Vec& w) const;  // s' with a_r = 0
  CVecX phi(const Vec& w) const;
  CVecX big_phi(const Vec& w, double b) const;
  // lexicographic labels of the w entries
  std::vector<std::string> labels() const;

  struct Jacobian {
    Mat minor;
    Vec diagonal;
    Vec expected;           // 1 for x columns, e^{y_jj} for y columns in row block j
    double off_triangle = 0.0;  // max modulus above the diagonal
  };
  Jacobian phi_jacobian(const Vec& w, double h = 1e-6) const;

 private:
  const SGroup* G_;
  // columns of w for y_jk in lexicographic order, with their (j, k, alpha)
  std::vector<std::tuple<int, int, int>> ylab_;
};

enum class Membership { Interior, Boundary, Exterior };
const char* membership_name(Membership m);
Membership membership(const JordanAlgebra& V, const CVecX& z, double tol = 1e-10);

}  // namespace huaharm::jordan
