#pragma once

#include <functional>
#include <vector>

namespace huaharm {

enum class RuleKind { GaussHermite, GaussLaguerre, GaussLegendre, AdaptiveHalfline };

// Nodes and weights of a fixed rule. Hermite weights are for e^{-x^2} on the
// real line, Laguerre weights for x^alpha e^{-x} on [0, inf), Legendre for [-1, 1].
struct QuadratureRule {
  RuleKind kind = RuleKind::GaussLegendre;
  double alpha = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t node_count() const { return nodes.size(); }
  double apply(const std::function<double(double)>& f) const;
};

QuadratureRule gauss_hermite(int m);
QuadratureRule gauss_laguerre(int m, double alpha = 0.0);
QuadratureRule gauss_legendre(int m);

// Cached rules, built once per (kind, m, alpha) and shared read-only.
const QuadratureRule& cached_hermite(int m);
const QuadratureRule& cached_legendre(int m);
const QuadratureRule& cached_laguerre(int m, double alpha);

struct AdaptiveOptions {
  double abs_tol = 1e-15;
  double rel_tol = 1e-13;
  int max_depth = 48;
  int max_intervals = 20000;
};

// Adaptive Gauss-Kronrod 7/15 on a finite interval.
double integrate_gk(const std::function<double(double)>& f, double a, double b,
                    const AdaptiveOptions& opt = {}, double* err = nullptr);

// Integral over [a, inf) via x = a + s/(1-s), then adaptive GK on [0, 1).
double integrate_halfline(const std::function<double(double)>& f, double a,
                          const AdaptiveOptions& opt = {}, double* err = nullptr);

}  // namespace huaharm
