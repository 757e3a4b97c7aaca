#include "varregion/region_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace varregion {

namespace {

// |lambda| within this distance of 1 is treated as unimodular.
constexpr double kUnitSlack = 1e-12;

void require_open_lambda(cplx lam, const char* where) {
  if (!(std::abs(lam) < 1.0)) {
    throw std::domain_error(std::string(where) + ": requires |lambda| < 1");
  }
}

void require_real_lambda(const EvalPoint& point, const char* where) {
  const cplx lam = point.lambda();
  if (lam.imag() != 0.0 || !(lam.real() >= 0.0 && lam.real() < 1.0)) {
    throw std::domain_error(std::string(where) + ": requires lambda real in [0, 1)");
  }
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Interior: return "interior";
    case Verdict::Boundary: return "boundary";
    case Verdict::Outside: return "outside";
  }
  return "unknown";
}

JanowskiParams::JanowskiParams(double A, double B) : A_(A), B_(B) {
  if (!std::isfinite(A) || !std::isfinite(B)) {
    throw std::domain_error("A and B must be finite");
  }
  if (A < -1.0) throw std::domain_error("constraint -1 <= A violated");
  if (B > 1.0) throw std::domain_error("constraint B <= 1 violated");
  if (B == 0.0) throw std::domain_error("constraint B != 0 violated");
  if (!(A < B)) throw std::domain_error("constraint A < B violated");
}

EvalPoint::EvalPoint(cplx z0, cplx lambda) : z0_(z0), lambda_(lambda) {
  if (!std::isfinite(z0.real()) || !std::isfinite(z0.imag()) || !(std::abs(z0) < 1.0)) {
    throw std::domain_error("constraint |z0| < 1 violated");
  }
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()) ||
      !(std::abs(lambda) <= 1.0 + kUnitSlack)) {
    throw std::domain_error("constraint |lambda| <= 1 violated");
  }
}

bool EvalPoint::is_singleton() const {
  return z0_ == 0.0 || std::abs(lambda_) >= 1.0 - kUnitSlack;
}

cplx mobius_delta(cplx z, cplx lam) {
  require_open_lambda(lam, "mobius_delta");
  return (z + lam) / (1.0 + std::conj(lam) * z);
}

cplx mobius_delta_inv(cplx s, cplx lam) {
  require_open_lambda(lam, "mobius_delta_inv");
  const cplx den = 1.0 - std::conj(lam) * s;
  if (den == 0.0) throw std::domain_error("mobius_delta_inv: vanishing denominator");
  return (s - lam) / den;
}

cplx phi_target(cplx z, const JanowskiParams& params) {
  return (params.A() - params.B()) * z / (1.0 + params.B() * z);
}

cplx majorant_q(cplx z, double A, double B) {
  if (!(A >= -1.0 && A < B && B <= 1.0)) {
    throw std::domain_error("majorant_q: constraint -1 <= A < B <= 1 violated");
  }
  if (B == 0.0) return std::exp(A * z);
  return std::exp((A / B - 1.0) * std::log(1.0 + B * z));
}

Disk variability_disk(const EvalPoint& point, const JanowskiParams& params) {
  require_real_lambda(point, "variability_disk");
  const double lam = point.lambda().real();
  const cplx z = point.z0();
  const double m2 = std::norm(z);
  const double den = 1.0 - lam * lam * m2;
  const double B = params.B();
  Disk d;
  d.center = (1.0 - lam * lam * m2 + lam * B * (1.0 - m2) * z) / den;
  d.radius = std::abs(B) * (1.0 - lam * lam) * m2 / den;
  return d;
}

cplx region_point(cplx a, const EvalPoint& point, const JanowskiParams& params) {
  const Disk d = variability_disk(point, params);
  return params.exponent() * std::log(d.center + a * d.radius);
}

cplx disk_parameter(cplx k, const EvalPoint& point, const JanowskiParams& params) {
  require_real_lambda(point, "disk_parameter");
  const cplx z = point.z0();
  if (z == 0.0) throw DegeneratePointError("disk_parameter: z0 = 0");
  const double lam = point.lambda().real();
  const cplx phase = (params.B() > 0 ? 1.0 : -1.0) * z * z / std::norm(z);
  return phase * (k + lam * std::conj(z)) / (1.0 + lam * z * k);
}

cplx boundary_point(double theta, const EvalPoint& point, const JanowskiParams& params) {
  const cplx z = point.z0();
  const cplx s = mobius_delta(std::polar(1.0, theta) * z, point.lambda());
  return params.exponent() * std::log(1.0 + params.B() * z * s);
}

BoundaryCurve boundary_curve(const EvalPoint& point, const JanowskiParams& params, int n) {
  if (n < 3) throw std::length_error("boundary_curve: needs at least 3 samples");
  BoundaryCurve curve;
  curve.samples.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    // The last node is exactly pi, not -pi + 2 pi.
    const double theta = (k == n) ? kPi : -kPi + 2.0 * kPi * k / n;
    curve.samples.push_back({theta, boundary_point(theta, point, params)});
  }
  return curve;
}

MembershipVerdict contains(cplx w, const EvalPoint& point, const JanowskiParams& params,
                           double tol) {
  if (!(tol > 0.0)) throw std::domain_error("contains: tolerance must be positive");
  const cplx z = point.z0();
  if (z == 0.0) throw DegeneratePointError("contains: z0 = 0, region is {0}");
  require_open_lambda(point.lambda(), "contains");

  // u = (f'(z0))^{B/(A-B)}, zeta = omega(z0)/z0, t = z0 psi(z0).
  const cplx u = std::exp(w / params.exponent());
  const cplx zeta = (u - 1.0) / (params.B() * z);
  // zeta = 1/conj(lambda) is the pole of the inverse automorphism; it pulls back to infinity.
  const bool at_pole = 1.0 - std::conj(point.lambda()) * zeta == 0.0;
  const double slack = at_pole ? INFINITY : std::abs(mobius_delta_inv(zeta, point.lambda())) - std::abs(z);
  Verdict status = Verdict::Outside;
  if (std::abs(slack) <= tol) {
    status = Verdict::Boundary;
  } else if (slack < 0.0) {
    status = Verdict::Interior;
  }
  return {status, slack};
}

Disk janowski_disk(const JanowskiParams& params) {
  const double A = params.A();
  const double B = params.B();
  if (!(B < 1.0)) throw std::domain_error("janowski_disk: requires B < 1 (B = 1 is a half-plane)");
  const double den = 1.0 - B * B;
  return {cplx((1.0 - A * B) / den, 0.0), (B - A) / den};
}

cplx singleton_value(const EvalPoint& point, const JanowskiParams& params) {
  if (!point.is_singleton()) {
    throw std::domain_error("singleton_value: region is not a single point");
  }
  if (point.z0() == 0.0) return 0.0;
  const cplx lam = point.lambda() / std::abs(point.lambda());
  return params.exponent() * std::log(1.0 + params.B() * lam * point.z0());
}

EvalPoint canonical_frame(const EvalPoint& point) {
  const cplx lam = point.lambda();
  const double mod = std::abs(lam);
  if (lam.imag() == 0.0 && lam.real() >= 0.0) return point;
  const cplx rot = lam / mod;
  return EvalPoint(rot * point.z0(), cplx(std::min(mod, 1.0), 0.0));
}

}  // namespace varregion
