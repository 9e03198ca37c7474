#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "huaharm/cli.hpp"
#include "huaharm/hua.hpp"
#include "huaharm/jordan.hpp"
#include "huaharm/kernels.hpp"

namespace huaharm::cli {

namespace {

std::string lab(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

bool is_integer(double v) { return std::abs(v - std::round(v)) < 1e-12; }

// Collects checks against the list declared before any computation.
class Recorder {
 public:
  // table references stay valid while a suite fills several at once
  explicit Recorder(SuiteResult& r) : r_(r) { r_.tables.reserve(kMaxTables); }
  void declare(const std::string& name) { r_.declared.push_back(name); }
  Check& add(const std::string& name, bool pass) {
    r_.checks.push_back({name, pass, {}, {}});
    return r_.checks.back();
  }
  Table& table(const std::string& name, const std::string& description, std::vector<std::string> columns) {
    if (r_.tables.size() == kMaxTables) throw std::logic_error("too many tables in one suite");
    r_.tables.push_back({name, description, std::move(columns), {}});
    return r_.tables.back();
  }
  SuiteResult& result() { return r_; }

 private:
  static constexpr std::size_t kMaxTables = 16;
  SuiteResult& r_;
};

double hyper_relative_residual(const BoundedHyperSolution& s, double x) {
  const double y = s.evaluate(x), y1 = ode_derivative(s, 1, x), y2 = ode_derivative(s, 2, x);
  const double scale = std::abs(x * y2) + std::abs(s.gamma() * y1) + std::abs((x + s.gamma() + s.beta()) * y);
  return std::abs(s.residual(x)) / std::max(scale, 1e-300);
}

double legendre_relative_residual(const BoundedLegendreSolution& s, double x) {
  const double y = s.evaluate(x), y1 = ode_derivative(s, 1, x), y2 = ode_derivative(s, 2, x);
  const double scale = std::abs(x * y2) + std::abs(s.beta() * y1) + std::abs(y);
  return std::abs(s.residual(x)) / std::max(scale, 1e-300);
}

void specfun_suite(const RunConfig& cfg, Recorder& rec) {
  const auto gammas = cfg.list("gammas"), betas = cfg.list("betas"), lbetas = cfg.list("legendre_betas");
  for (double g : gammas)
    for (double b : betas) rec.declare("hyper_residual g=" + lab(g) + " b=" + lab(b));
  for (double g : gammas) rec.declare("exponent g=" + lab(g) + " b=1");
  for (double b : lbetas) rec.declare("legendre_residual b=" + lab(b));

  const auto grid = geometric_grid(cfg.num("grid_lo"), cfg.num("grid_hi"), cfg.integer("grid_n"));
  const double tol = cfg.num("residual_tol"), etol = cfg.num("exponent_tol");

  auto& hy = rec.table("hyper", "bounded hyper solution; residual is relative to the largest ODE term",
                       {"gamma", "beta", "x", "value", "residual"});
  for (double g : gammas)
    for (double b : betas) {
      BoundedHyperSolution s(g, b);
      double worst = 0.0;
      for (double x : grid) {
        const double res = hyper_relative_residual(s, x);
        worst = std::max(worst, res);
        hy.rows.push_back({g, b, x, s.evaluate(x), res});
      }
      auto& c = rec.add("hyper_residual g=" + lab(g) + " b=" + lab(b), worst <= tol);
      c.values["max_relative_residual"] = worst;
    }

  auto& ex = rec.table("exponents", "fitted exponent of the order-k derivative near 0 (beta = 1)",
                       {"gamma", "beta", "exponent", "expected", "log_flag", "power_residual", "log_residual"});
  for (double g : gammas) {
    BoundedHyperSolution s(g, 1.0);
    const auto fit = asymptotic_exponent(s);
    const double expected = g - s.k();
    bool pass;
    if (is_integer(g)) {
      pass = fit.log_flag;
    } else {
      pass = !fit.log_flag && std::abs(fit.exponent - expected) <= etol;
    }
    ex.rows.push_back({g, 1.0, fit.exponent, expected, fit.log_flag ? 1.0 : 0.0, fit.power_residual, fit.log_residual});
    auto& c = rec.add("exponent g=" + lab(g) + " b=1", pass);
    c.values["exponent"] = fit.exponent;
    c.values["expected"] = expected;
    c.values["power_residual"] = fit.power_residual;
    c.values["log_residual"] = fit.log_residual;
    c.notes["model"] = fit.log_flag ? "log" : "power";
  }

  auto& le = rec.table("legendre", "bounded Legendre-type solution; residual is relative to the largest ODE term",
                       {"beta", "x", "value", "residual"});
  for (double b : lbetas) {
    BoundedLegendreSolution s(b);
    double worst = 0.0;
    for (double x : grid) {
      const double res = legendre_relative_residual(s, x);
      worst = std::max(worst, res);
      le.rows.push_back({b, x, s.evaluate(x), res});
    }
    auto& c = rec.add("legendre_residual b=" + lab(b), worst <= tol);
    c.values["max_relative_residual"] = worst;
  }
}

ProbeConfig probe_config(const RunConfig& cfg) {
  ProbeConfig pc;
  pc.a_lo = cfg.num("a_lo");
  pc.a_hi = cfg.num("a_hi");
  pc.samples = cfg.integer("samples");
  pc.fit_lo = cfg.num("fit_lo");
  pc.fit_hi = cfg.num("fit_hi");
  return pc;
}

// order k+1 blows up at a^{n alpha - k}, or logarithmically when n alpha is an integer
bool rate_ok(const DichotomyReport& r, double n_alpha, double tol) {
  if (r.verdict != Verdict::BlowUp) return false;
  if (is_integer(n_alpha)) return r.log_flag;
  return !r.log_flag && std::abs(r.fitted_exponent - r.expected_exponent) <= tol;
}

void fill_report(Check& c, const DichotomyReport& r) {
  c.values["k"] = r.k;
  c.values["fitted_exponent"] = r.fitted_exponent;
  c.values["expected_exponent"] = r.expected_exponent;
  c.values["fit_residual"] = r.fit_residual;
  c.values["log_residual"] = r.log_residual;
  c.notes["verdict"] = verdict_name(r.verdict);
  c.notes["model"] = r.log_flag ? "log" : "power";
  if (!r.note.empty()) c.notes["note"] = r.note;
}

void dichotomy_cn_suite(const RunConfig& cfg, Recorder& rec) {
  const double alpha = cfg.num("alpha");
  const int n = cfg.integer("n");
  if (n < 1) throw ConfigError("key 'n': must be at least 1");
  const std::string data = cfg.str("data");
  if (data != "constant" && data != "single-mode")
    throw ConfigError("key 'data': expected 'constant' or 'single-mode'");
  const bool constant = data == "constant";
  const int k = singular_index(n * alpha);

  rec.declare("verdict");
  if (constant)
    for (int p = 0; p <= k + 1; ++p) rec.declare("bounded p=" + std::to_string(p));
  else
    rec.declare("rate p=" + std::to_string(k + 1));

  RVec xi = cfg.list("xi");
  if (xi.size() > static_cast<std::size_t>(2 * n)) throw ConfigError("key 'xi': more than 2n entries");
  xi.resize(2 * n, 0.0);
  const auto f = constant ? TrigBoundaryData::constant(n, 1.0) : TrigBoundaryData::single_mode(xi, 1.0);
  const auto phi = radial_bump(cfg.num("bump_lo"), cfg.num("bump_hi"));
  const auto pc = probe_config(cfg);
  const auto rep = dichotomy_cn(f, alpha, phi, pc);

  const auto grid = geometric_grid(pc.a_lo, pc.a_hi, pc.samples);
  auto& tab = rec.table("probe", "I_p(a) on the a-grid", {"alpha", "n", "p", "a", "re", "im"});
  std::vector<RVec> mags(k + 2);
  for (int p = 0; p <= k + 1; ++p)
    for (double a : grid) {
      const cplx v = I_p_probe(f, alpha, phi, p, a);
      tab.rows.push_back({alpha, static_cast<double>(n), static_cast<double>(p), a, v.real(), v.imag()});
      mags[p].push_back(std::abs(v));
    }

  RVec minus_xi = xi;
  for (auto& v : minus_xi) v = -v;
  // a single mode blows up exactly when the window sees it
  const bool nonzero_mode = !constant && sqnorm(xi) > 0.0 && std::abs(phi(minus_xi)) > 0.0;
  const Verdict expected = nonzero_mode ? Verdict::BlowUp : Verdict::Regular;
  auto& v = rec.add("verdict", rep.verdict == expected);
  fill_report(v, rep);
  v.notes["expected"] = verdict_name(expected);
  rec.result().summary["verdict"] = verdict_name(rep.verdict);
  rec.result().summary["fitted_exponent"] = fmt17(rep.fitted_exponent);

  if (constant) {
    const double ftol = cfg.num("flat_tol");
    for (int p = 0; p <= k + 1; ++p) {
      const double mx = *std::max_element(mags[p].begin(), mags[p].end());
      const double mn = *std::min_element(mags[p].begin(), mags[p].end());
      const double ratio = mx == 0.0 ? 1.0 : (mn > 0.0 ? mx / mn : INFINITY);
      auto& c = rec.add("bounded p=" + std::to_string(p), std::isfinite(mx) && ratio <= 1.0 + ftol);
      c.values["max_abs"] = mx;
      c.values["max_min_ratio"] = ratio;
    }
  } else {
    auto& c = rec.add("rate p=" + std::to_string(k + 1), rate_ok(rep, n * alpha, cfg.num("exponent_tol")));
    fill_report(c, rep);
  }
}

void dichotomy_heis_suite(const RunConfig& cfg, Recorder& rec) {
  const double alpha = cfg.num("alpha");
  const int n = cfg.integer("n"), kappa = cfg.integer("kappa");
  if (n < 1) throw ConfigError("key 'n': must be at least 1");
  if (kappa < 0) throw ConfigError("key 'kappa': must be non-negative");
  const int k = singular_index(n * alpha);
  for (int p = 0; p <= k; ++p) rec.declare("cauchy p=" + std::to_string(p));
  rec.declare("rate p=" + std::to_string(k + 1));

  std::vector<HAtom> atoms;
  for (double l : cfg.list("lambdas")) atoms.push_back({l, kappa, 1.0});
  const auto bump = smooth_bump(cfg.num("bump_lo"), cfg.num("bump_hi"));
  const auto psi = bump.f;
  const auto pc = probe_config(cfg);

  // decreasing a, so successive differences must shrink toward 0
  auto grid = geometric_grid(pc.a_lo, pc.a_hi, pc.samples);
  std::reverse(grid.begin(), grid.end());
  auto& tab = rec.table("probe", "order-p probe of the kappa component on the a-grid",
                        {"alpha", "n", "kappa", "p", "a", "re", "im"});
  for (int p = 0; p <= k; ++p) {
    std::vector<cplx> vals;
    for (double a : grid) {
      vals.push_back(heis_I_probe(atoms, alpha, n, psi, kappa, p, a));
      tab.rows.push_back({alpha, double(n), double(kappa), double(p), a, vals.back().real(), vals.back().imag()});
    }
    RVec d;
    for (std::size_t i = 1; i < vals.size(); ++i) d.push_back(std::abs(vals[i] - vals[i - 1]));
    double scale = 0.0;
    for (auto v : vals) scale = std::max(scale, std::abs(v));
    // tail of the difference sequence is monotone and small against the values
    const std::size_t half = d.size() / 2;
    bool mono = true;
    for (std::size_t i = half + 1; i < d.size(); ++i) mono = mono && d[i] <= d[i - 1] * (1.0 + 1e-9) + 1e-15;
    const double last = d.empty() ? 0.0 : d.back();
    const bool small = last <= 1e-2 * std::max(scale, 1e-300) || scale == 0.0;
    auto& c = rec.add("cauchy p=" + std::to_string(p), mono && small);
    c.values["last_difference"] = last;
    c.values["max_abs"] = scale;
    c.values["limit_re"] = vals.back().real();
    c.values["limit_im"] = vals.back().imag();
  }
  const auto rep = dichotomy_heis(atoms, alpha, n, psi, kappa, pc);
  for (std::size_t i = 0; i < rep.a_samples.size(); ++i)
    tab.rows.push_back({alpha, double(n), double(kappa), double(rep.p), rep.a_samples[i], rep.values[i].real(),
                        rep.values[i].imag()});
  auto& c = rec.add("rate p=" + std::to_string(k + 1), rate_ok(rep, n * alpha, cfg.num("exponent_tol")));
  fill_report(c, rep);
  rec.result().summary["verdict"] = verdict_name(rep.verdict);
  rec.result().summary["fitted_exponent"] = fmt17(rep.fitted_exponent);
}

void hua_suite(const RunConfig& cfg, Recorder& rec) {
  using namespace huaharm::hua;
  const auto ranks = cfg.int_list("ranks");
  for (int r : ranks) {
    if (r < 2 || r > 4) throw ConfigError("key 'ranks': each rank must lie in 2..4");
    rec.declare("annihilation r=" + std::to_string(r));
    rec.declare("control r=" + std::to_string(r));
    rec.declare("base_point r=" + std::to_string(r));
    rec.declare("identification r=" + std::to_string(r));
  }
  const double atol = cfg.num("annihilation_tol"), cmin = cfg.num("control_min"), btol = cfg.num("base_tol"),
               itol = cfg.num("identification_tol");
  const int points = cfg.integer("points");
  std::mt19937_64 rng(static_cast<std::uint64_t>(cfg.integer("seed")));
  std::uniform_real_distribution<double> u(-0.5, 0.5);

  auto& tab = rec.table("hua", "per-rank residuals of the strongly diagonal operators",
                        {"rank", "function", "max_invariant", "pluri"});
  auto& idt = rec.table("identification", "H_r on the pulled-back function against L_{1/2} on the Heisenberg side",
                        {"rank", "sample", "hua_re", "hua_im", "l_re", "l_im"});
  for (int r : ranks) {
    HuaContext C(r);
    std::vector<SGroupElement> samples;
    for (int i = 0; i < points; ++i) samples.push_back(C.group().random(rng, 0.5));

    double worst = 0.0;
    for (int t = 0; t < 6; ++t) {
      Mat B(r, r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) B(i, j) = u(rng);
      const Vec cone = C.algebra().from_matrix(B * B.transpose() + 0.1 * Mat::Identity(r, r));
      const auto rep = hua_report(C, exp_test_function(cone, t % 2 == 0), samples, atol);
      worst = std::max(worst, rep.max_invariant());
      tab.rows.push_back({double(r), double(t), rep.max_invariant(), rep.pluri});
    }
    auto& a = rec.add("annihilation r=" + std::to_string(r), worst <= atol);
    a.values["max_residual"] = worst;

    const auto c1 = C.group().peirce_basis().frame.c[0];
    const auto ctl = hua_report(C, modulus_squared(c1), {C.group().identity()}, atol);
    tab.rows.push_back({double(r), -1.0, ctl.max_invariant(), ctl.pluri});
    auto& c = rec.add("control r=" + std::to_string(r), ctl.max_invariant() >= cmin);
    c.values["max_residual"] = ctl.max_invariant();
    c.values["pluri"] = ctl.pluri;

    double bp = 0.0;
    for (int t = 0; t < 3; ++t) {
      Vec co(C.dim());
      for (int i = 0; i < co.size(); ++i) co[i] = u(rng);
      DFunc F = [co](const CVecX& z) {
        cplx s = 0.0;
        const auto m = z.size();
        for (Eigen::Index i = 0; i < m; ++i) s += co[i] * z[i] * std::conj(z[(i + 1) % m]) + 0.3 * co[i] * z[i] * z[i] * z[i];
        return cplx(s.real(), 0.0);
      };
      bp = std::max(bp, base_point_deviation(C, F));
    }
    auto& b = rec.add("base_point r=" + std::to_string(r), bp <= btol);
    b.values["max_deviation"] = bp;

    SFunc f = [](const SPoint& p) {
      double s = 0.3 * p.t * p.t + p.a;
      for (auto z : p.zeta) s += 0.7 * std::norm(z) + z.real() * p.a;
      return cplx(std::exp(-0.2 * s) * std::cos(p.t + 0.5 * p.a), 0.0);
    };
    const GFunc G = pull_back(C, f);
    double wl = 0.0;
    for (int t = 0; t < 3; ++t) {
      const auto sp = C.group().split(C.group().random(rng, 0.5)).second;
      const cplx h = hua_j(C, G, C.affine(sp), r - 1);
      const cplx l = op_L_alpha(0.5, f, heisenberg_image(C, sp));
      wl = std::max(wl, std::abs(h - l));
      idt.rows.push_back({double(r), double(t), h.real(), h.imag(), l.real(), l.imag()});
    }
    auto& i = rec.add("identification r=" + std::to_string(r), wl <= itol);
    i.values["max_difference"] = wl;
  }
}

void jordan_suite(const RunConfig& cfg, Recorder& rec) {
  using namespace huaharm::jordan;
  const auto ranks = cfg.int_list("ranks");
  const char* names[] = {"frame", "peirce", "triangularity", "weights", "brackets", "refactor", "jacobian", "membership"};
  for (int r : ranks) {
    if (r < 2 || r > 5) throw ConfigError("key 'ranks': each rank must lie in 2..5");
    for (const char* nm : names) rec.declare(std::string(nm) + " r=" + std::to_string(r));
  }
  const double tol = cfg.num("algebra_tol"), jtol = cfg.num("jacobian_tol");
  const int jp = cfg.integer("jacobian_points"), mp = cfg.integer("membership_points");
  std::mt19937_64 rng(static_cast<std::uint64_t>(cfg.integer("seed")));
  std::uniform_real_distribution<double> u(-0.7, 0.7);

  auto& jt = rec.table("jacobian", "diagonal of the phi Jacobian minor at random w",
                       {"rank", "point", "column", "diagonal", "expected"});
  for (int r : ranks) {
    const std::string tag = " r=" + std::to_string(r);
    const auto V = JordanAlgebra::sym(r);
    const auto F = standard_frame(V);
    const auto fr = check_frame(V, F);
    auto& c0 = rec.add("frame" + tag, fr.ok(tol));
    c0.values["idempotent"] = fr.idempotent;
    c0.values["orthogonal"] = fr.orthogonal;
    c0.values["sum"] = fr.sum;

    const auto P = peirce(V, F);
    const auto pr = check_peirce(V, P, Vec::LinSpaced(r, 0.3, 1.7));
    auto& c1 = rec.add("peirce" + tag, std::max({pr.eigen, pr.completeness, pr.orthonormality}) <= tol);
    c1.values["eigen"] = pr.eigen;
    c1.values["completeness"] = pr.completeness;
    c1.values["orthonormality"] = pr.orthonormality;

    const SGroup G(V, P);
    double tri = 0.0, dec = 0.0;
    for (int t = 0; t < 20; ++t) {
      const auto g = G.random(rng, 0.8);
      tri = std::max(tri, G.triangularity_deviation(G.n_part(g.y)));
      tri = std::max(tri, G.triangularity_deviation(G.linear(g)));
      const auto g2 = G.from_affine(G.affine(g));
      dec = std::max(dec, (G.affine(g2) - G.affine(g)).cwiseAbs().maxCoeff());
      const auto [sm, sp] = G.split(g);
      dec = std::max(dec, (G.affine(G.compose(sm, sp)) - G.affine(g)).cwiseAbs().maxCoeff());
      const auto z = G.act(g, G.ie());
      dec = std::max(dec, (G.act(G.section(z), G.ie()) - z).cwiseAbs().maxCoeff());
    }
    auto& c2 = rec.add("triangularity" + tag, tri <= tol);
    c2.values["max_upper"] = tri;
    const auto w = adjoint_weight_check(G);
    auto& c3 = rec.add("weights" + tag, w.max() <= tol);
    c3.values["v_dev"] = w.v_dev;
    c3.values["n_dev"] = w.n_dev;
    const auto br = splus_brackets(G);
    auto& c4 = rec.add("brackets" + tag, br.max_dev <= tol);
    c4.values["max_dev"] = br.max_dev;
    auto& c5 = rec.add("refactor" + tag, dec <= tol);
    c5.values["max_dev"] = dec;

    const SpecialCoordinates S(G);
    double jdev = 0.0, upper = 0.0;
    for (int t = 0; t < jp; ++t) {
      Vec wv(S.size());
      for (int i = 0; i < wv.size(); ++i) wv[i] = u(rng);
      const auto J = S.phi_jacobian(wv);
      for (int i = 0; i < J.diagonal.size(); ++i) {
        jdev = std::max(jdev, std::abs(J.diagonal[i] - J.expected[i]));
        jt.rows.push_back({double(r), double(t), double(i), J.diagonal[i], J.expected[i]});
      }
      upper = std::max(upper, J.off_triangle);
    }
    auto& c6 = rec.add("jacobian" + tag, jdev <= jtol && upper <= jtol);
    c6.values["diagonal_dev"] = jdev;
    c6.values["off_triangle"] = upper;

    int bad = 0;
    for (int t = 0; t < mp; ++t) {
      Vec wv(S.size());
      for (int i = 0; i < wv.size(); ++i) wv[i] = u(rng);
      double b = u(rng);
      if (b == 0.0) b = 0.1;
      const auto m = membership(V, S.big_phi(wv, b));
      if ((b > 0.0) != (m == Membership::Interior) || (b < 0.0) != (m == Membership::Exterior)) ++bad;
    }
    auto& c7 = rec.add("membership" + tag, bad == 0);
    c7.values["mismatches"] = bad;
    c7.values["samples"] = mp;
  }
}

void kernel_tab_suite(const RunConfig& cfg, Recorder& rec) {
  const double alpha = cfg.num("alpha");
  const int n = cfg.integer("n");
  if (n < 1) throw ConfigError("key 'n': must be at least 1");
  const auto avals = cfg.list("a_values");
  for (double a : avals) {
    if (!(a > 0.0)) throw ConfigError("key 'a_values': entries must be positive");
    rec.declare("truncation a=" + lab(a));
    if (n == 1) rec.declare("mass a=" + lab(a));
  }
  HKernelSpec spec;
  spec.alpha = alpha;
  spec.n = n;
  auto& tab = rec.table("p_kernel", "P_a^alpha at zeta = (rho, 0, ...), t", {"alpha", "n", "a", "rho", "t", "value"});
  const auto rhos = cfg.list("rho"), ts = cfg.list("t");
  for (double a : avals) {
    const PKernel K(spec, a);
    for (double rho : rhos)
      for (double t : ts) {
        HPoint w{CVec(n, 0.0), t};
        w.zeta[0] = rho;
        tab.rows.push_back({alpha, double(n), a, rho, t, K(w)});
      }
    auto& c = rec.add("truncation a=" + lab(a), K.truncation_ok());
    c.values["kappa_max"] = K.kappa_max();
    if (!K.warning().empty()) c.notes["warning"] = K.warning();
    if (n == 1) {
      const double m = K.box_mass(cfg.num("box_t"), cfg.num("box_r"));
      auto& mc = rec.add("mass a=" + lab(a), std::abs(m - 1.0) <= cfg.num("mass_tol"));
      mc.values["mass"] = m;
    }
  }
}

}  // namespace

SuiteResult run_suite(const RunConfig& cfg) {
  SuiteResult res;
  Recorder rec(res);
  const auto& e = cfg.experiment();
  try {
    if (e == "specfun-suite") specfun_suite(cfg, rec);
    else if (e == "dichotomy-cn") dichotomy_cn_suite(cfg, rec);
    else if (e == "dichotomy-heis") dichotomy_heis_suite(cfg, rec);
    else if (e == "hua-suite") hua_suite(cfg, rec);
    else if (e == "jordan-suite") jordan_suite(cfg, rec);
    else if (e == "kernel-tab") kernel_tab_suite(cfg, rec);
    else throw ConfigError("unknown experiment '" + e + "'");
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& ex) {
    res.error = ex.what();
  }
  return res;
}

}  // namespace huaharm::cli
