#pragma once

// Closed-form machinery for the region of variability of log f'(z0) over the
// class C_lambda(A,B): disk automorphisms, the variability disk (c, r), the
// boundary parametrization and an exact membership test.
//
// Conventions:
//   * parameters follow -1 <= A < B <= 1 with B != 0;
//   * every complex log and power is taken on the principal branch. This is
//     legitimate because the arguments always have the form 1 + B*z*s with
//     |B z s| < 1, hence positive real part.

#include <complex>
#include <stdexcept>
#include <vector>

namespace varregion {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Thrown when an operation is asked about z0 = 0, where the region is {0}.
class DegeneratePointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The real pair (A, B) with -1 <= A < B <= 1 and B != 0.
class JanowskiParams {
 public:
  /// Throws std::domain_error naming the violated constraint.
  JanowskiParams(double A, double B);

  double A() const { return A_; }
  double B() const { return B_; }
  /// (A - B) / B, the power linking (f')^{B/(A-B)} with f'.
  double exponent() const { return (A_ - B_) / B_; }

  friend bool operator==(const JanowskiParams&, const JanowskiParams&) = default;

 private:
  double A_;
  double B_;
};

/// Evaluation data (z0, lambda) with |z0| < 1 and |lambda| <= 1.
class EvalPoint {
 public:
  EvalPoint(cplx z0, cplx lambda);

  cplx z0() const { return z0_; }
  cplx lambda() const { return lambda_; }

  bool lambda_is_real() const { return lambda_.imag() == 0.0 && lambda_.real() >= 0.0; }
  /// |lambda| = 1 or z0 = 0: the region collapses to one point.
  bool is_singleton() const;

  friend bool operator==(const EvalPoint&, const EvalPoint&) = default;

 private:
  cplx z0_;
  cplx lambda_;
};

struct Disk {
  cplx center;
  double radius = 0.0;

  bool is_singleton() const { return radius == 0.0; }
};

struct BoundarySample {
  double theta;
  cplx value;
};

/// Ordered samples of theta -> log F'_{e^{i theta},lambda}(z0), theta in (-pi, pi].
struct BoundaryCurve {
  std::vector<BoundarySample> samples;

  std::size_t size() const { return samples.size(); }
};

enum class Verdict { Interior, Boundary, Outside };

const char* to_string(Verdict v);

struct MembershipVerdict {
  Verdict status;
  /// |pullback| - |z0|; negative inside, zero on the boundary.
  double slack;
};

inline constexpr double kDefaultMembershipTol = 1e-9;

/// delta(z, lam) = (z + lam) / (1 + conj(lam) z). Requires |lam| < 1.
cplx mobius_delta(cplx z, cplx lam);

/// Inverse of mobius_delta in its first argument: (s - lam) / (1 - conj(lam) s).
cplx mobius_delta_inv(cplx s, cplx lam);

/// phi(z) = (A - B) z / (1 + B z).
cplx phi_target(cplx z, const JanowskiParams& params);

/// q(z) = (1 + B z)^{A/B - 1} for B != 0 and exp(A z) for B = 0.
/// Accepts B = 0, unlike JanowskiParams.
cplx majorant_q(cplx z, double A, double B);

/// The disk D(c(z0,lambda), r(z0,lambda)) that (f'(z0))^{B/(A-B)} ranges over.
/// Requires lambda real in [0, 1).
Disk variability_disk(const EvalPoint& point, const JanowskiParams& params);

/// ((A - B) / B) Log(c + a r) for |a| <= 1.
cplx region_point(cplx a, const EvalPoint& point, const JanowskiParams& params);

/// Disk parameter a with c + a r = 1 + B z0 delta(z0 k, lambda), for |k| <= 1.
/// For k = e^{i theta} this is the unimodular factor relating boundary_point
/// to region_point. Requires real lambda in [0, 1) and z0 != 0.
cplx disk_parameter(cplx k, const EvalPoint& point, const JanowskiParams& params);

/// ((A - B) / B) Log(1 + B z0 delta(e^{i theta} z0, lambda)).
/// Valid for any |lambda| < 1 (it is the value of an extremal member).
cplx boundary_point(double theta, const EvalPoint& point, const JanowskiParams& params);

/// n samples at theta_k = -pi + 2 pi k / n, k = 1..n. Throws std::length_error for n < 3.
BoundaryCurve boundary_curve(const EvalPoint& point, const JanowskiParams& params, int n);

/// Exact membership of w in V_lambda(z0, A, B) through the Schwarz-Pick pullback.
/// Accepts complex |lambda| < 1. Throws DegeneratePointError for z0 = 0.
MembershipVerdict contains(cplx w, const EvalPoint& point, const JanowskiParams& params,
                           double tol = kDefaultMembershipTol);

/// The disk of the Janowski curvature condition, for B < 1.
Disk janowski_disk(const JanowskiParams& params);

/// The single value of V when |lambda| = 1 or z0 = 0: ((A-B)/B) Log(1 + B lambda z0).
cplx singleton_value(const EvalPoint& point, const JanowskiParams& params);

/// Rotates a complex lambda onto the nonnegative axis:
/// V_lambda(z0) = V_{|lambda|}(e^{i arg lambda} z0).
EvalPoint canonical_frame(const EvalPoint& point);

}  // namespace varregion
