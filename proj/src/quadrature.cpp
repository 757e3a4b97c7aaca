#include "varregion/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace varregion {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::domain_error("gauss_legendre: needs at least one node");
  GaussLegendreRule rule;
  rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
  rule.weights.assign(static_cast<std::size_t>(n), 0.0);
  const double pi = 3.14159265358979323846;
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th largest root.
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    rule.weights[static_cast<std::size_t>(i)] = w;
  }
  return rule;
}

void QuadratureConfig::validate() const {
  if (nodes_per_panel < 2) throw std::domain_error("quadrature: nodes_per_panel must be >= 2");
  if (max_panels < 1) throw std::domain_error("quadrature: max_panels must be >= 1");
  if (!(abs_tol > 0.0)) throw std::domain_error("quadrature: abs_tol must be positive");
}

namespace {

using cplx = std::complex<double>;

cplx panel(const ComplexIntegrand& f, const GaussLegendreRule& rule, cplx a, cplx b) {
  const cplx mid = 0.5 * (a + b);
  const cplx half = 0.5 * (b - a);
  cplx sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

struct Adaptive {
  const ComplexIntegrand& f;
  const GaussLegendreRule& rule;
  int max_panels;
  int panels = 1;
  double worst = 0.0;

  // Error budget is split in proportion to panel length.
  cplx refine(cplx a, cplx b, cplx whole, double tol) {
    const cplx m = 0.5 * (a + b);
    const cplx left = panel(f, rule, a, m);
    const cplx right = panel(f, rule, m, b);
    const cplx split = left + right;
    const double err = std::abs(split - whole);
    if (err <= tol) return split;
    if (panels + 2 > max_panels) {
      worst = std::max(worst, err);
      return split;
    }
    ++panels;
    return refine(a, m, left, 0.5 * tol) + refine(m, b, right, 0.5 * tol);
  }
};

}  // namespace

cplx integrate_segment(const ComplexIntegrand& f, cplx from, cplx to, const QuadratureConfig& cfg) {
  cfg.validate();
  if (from == to) return 0.0;
  const GaussLegendreRule rule = gauss_legendre(cfg.nodes_per_panel);
  Adaptive run{f, rule, cfg.max_panels};
  const cplx whole = panel(f, rule, from, to);
  const cplx result = run.refine(from, to, whole, cfg.abs_tol);
  if (run.worst > 0.0) {
    throw ConvergenceError("quadrature did not reach abs_tol within max_panels (achieved " +
                               std::to_string(run.worst) + ")",
                           result, run.worst);
  }
  return result;
}

}  // namespace varregion
