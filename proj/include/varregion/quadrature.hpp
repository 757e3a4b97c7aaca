#pragma once

// Gauss-Legendre panels and adaptive bisection for analytic integrands
// along straight segments in the complex plane.

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace varregion {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point rule by Newton iteration on P_n. Throws std::domain_error for n < 1.
GaussLegendreRule gauss_legendre(int n);

struct QuadratureConfig {
  int nodes_per_panel = 16;
  int max_panels = 4096;
  double abs_tol = 1e-12;

  void validate() const;
};

/// Raised when the tolerance is not met within max_panels.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::complex<double> estimate, double achieved)
      : std::runtime_error(what), estimate_(estimate), achieved_(achieved) {}

  std::complex<double> estimate() const { return estimate_; }
  double achieved_error() const { return achieved_; }

 private:
  std::complex<double> estimate_;
  double achieved_;
};

using ComplexIntegrand = std::function<std::complex<double>(std::complex<double>)>;

/// Integral of f along the segment [from, to] with adaptive panel bisection.
std::complex<double> integrate_segment(const ComplexIntegrand& f, std::complex<double> from,
                                       std::complex<double> to, const QuadratureConfig& cfg);

}  // namespace varregion
