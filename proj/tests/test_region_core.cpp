#include <cmath>
#include <random>

#include "doctest.h"
#include "varregion/region_core.hpp"

using namespace varregion;

namespace {

const JanowskiParams kP(0.0, 0.5);
const EvalPoint kPoint(0.5, 0.5);

std::vector<JanowskiParams> param_grid() {
  return {JanowskiParams(0.0, 0.5), JanowskiParams(-0.5, 0.5), JanowskiParams(-1.0, 1.0),
          JanowskiParams(0.3, 0.7), JanowskiParams(-0.9, -0.1)};
}

std::vector<cplx> z0_grid() { return {0.5, cplx(0.3, 0.4), -0.7, cplx(0.0, 0.1)}; }

std::vector<double> lambda_grid() { return {0.0, 0.3, 0.5, 0.9}; }

cplx random_in_disk(std::mt19937_64& gen, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(gen)), 2.0 * kPi * u(gen));
}

}  // namespace

TEST_CASE("parameter and point constraints") {
  CHECK_NOTHROW(JanowskiParams(-1.0, 1.0));
  CHECK_THROWS_AS(JanowskiParams(-1.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(JanowskiParams(0.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(JanowskiParams(0.0, 1.5), std::domain_error);
  CHECK_THROWS_WITH(JanowskiParams(-0.5, 0.0), doctest::Contains("B != 0"));
  CHECK_THROWS_AS(JanowskiParams(NAN, 0.5), std::domain_error);

  CHECK_THROWS_AS(EvalPoint(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(EvalPoint(0.5, 1.5), std::domain_error);
  CHECK(EvalPoint(0.5, cplx(0.0, 1.0)).is_singleton());
  CHECK(EvalPoint(0.0, 0.3).is_singleton());
  CHECK_FALSE(kPoint.is_singleton());
}

TEST_CASE("mobius_delta examples") {
  const cplx lam(0.3, -0.2);
  CHECK(mobius_delta(0.0, lam) == lam);
  CHECK(mobius_delta(cplx(0.1, 0.7), 0.0) == cplx(0.1, 0.7));
  CHECK(std::abs(mobius_delta(0.5, 0.5) - 0.8) < 1e-15);
  CHECK_THROWS_AS(mobius_delta(0.5, 1.0), std::domain_error);
}

TEST_CASE("mobius_delta_inv examples") {
  const cplx lam(0.3, -0.2);
  CHECK(std::abs(mobius_delta_inv(lam, lam)) < 1e-16);
  CHECK(std::abs(mobius_delta_inv(0.8, 0.5) - 0.5) < 1e-15);
  CHECK(mobius_delta_inv(0.0, 0.5) == cplx(-0.5));
  CHECK_THROWS_AS(mobius_delta_inv(0.0, cplx(0.0, 1.0)), std::domain_error);
}

TEST_CASE("automorphism inverse and Schwarz-Pick contraction") {
  std::mt19937_64 gen(11);
  double worst_inverse = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const cplx lam = random_in_disk(gen, 0.999);
    const cplx z = random_in_disk(gen, 1.0);
    worst_inverse = std::max(worst_inverse, std::abs(mobius_delta_inv(mobius_delta(z, lam), lam) - z));
    CHECK(std::abs(mobius_delta(z, lam)) <= 1.0 + 1e-12);
  }
  CHECK(worst_inverse < 1e-12);

  // Unit circle onto unit circle, interior strictly inside.
  for (double lam_mod : {0.0, 0.5, 0.9}) {
    const cplx lam = std::polar(lam_mod, 0.7);
    for (int k = 0; k < 256; ++k) {
      const cplx on = std::polar(1.0, 2.0 * kPi * k / 256);
      CHECK(std::abs(std::abs(mobius_delta(on, lam)) - 1.0) < 1e-12);
      CHECK(std::abs(mobius_delta(0.9 * on, lam)) < 1.0 - 1e-12);
    }
  }
}

TEST_CASE("phi_target and majorant_q") {
  CHECK(phi_target(0.0, kP) == cplx(0.0));
  CHECK(std::abs(phi_target(0.5, kP) - (-0.2)) < 1e-15);

  CHECK(majorant_q(0.0, -0.3, 0.8) == cplx(1.0));
  CHECK(std::abs(majorant_q(0.5, 0.0, 0.5) - 0.8) < 1e-15);
  const cplx z(0.2, -0.6);
  CHECK(std::abs(majorant_q(z, -0.5, 0.0) - std::exp(-0.5 * z)) < 1e-15);
  CHECK_THROWS_AS(majorant_q(z, 0.5, 0.0), std::domain_error);

  // z q'(z)/q(z) = phi(z), with q' by central differences.
  std::mt19937_64 gen(5);
  const double h = 1e-6;
  double worst = 0.0;
  for (const JanowskiParams& p : param_grid()) {
    for (int i = 0; i < 200; ++i) {
      const cplx w = random_in_disk(gen, 0.9);
      const cplx qp = (majorant_q(w + h, p.A(), p.B()) - majorant_q(w - h, p.A(), p.B())) / (2.0 * h);
      worst = std::max(worst, std::abs(w * qp / majorant_q(w, p.A(), p.B()) - phi_target(w, p)));
    }
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("variability_disk examples") {
  const Disk d0 = variability_disk(EvalPoint(0.0, 0.3), kP);
  CHECK(d0.center == cplx(1.0));
  CHECK(d0.radius == 0.0);

  const Disk d = variability_disk(kPoint, kP);
  CHECK(std::abs(d.center - 1.1) < 1e-12);
  CHECK(std::abs(d.radius - 0.1) < 1e-12);

  for (const JanowskiParams& p : param_grid()) {
    for (cplx z0 : z0_grid()) {
      const Disk e = variability_disk(EvalPoint(z0, 0.0), p);
      CHECK(e.center == cplx(1.0));
      CHECK(e.radius == std::abs(p.B()) * std::norm(z0));
    }
  }
  CHECK_THROWS_AS(variability_disk(EvalPoint(0.5, cplx(0.0, 0.5)), kP), std::domain_error);
  CHECK_THROWS_AS(variability_disk(EvalPoint(0.5, -0.5), kP), std::domain_error);
  CHECK_THROWS_AS(variability_disk(EvalPoint(0.5, 1.0), kP), std::domain_error);
}

TEST_CASE("region_point examples") {
  // a with c + a r = 1: a = (1 - c) / r = -1.
  CHECK(std::abs(region_point(-1.0, kPoint, kP)) < 1e-15);
  CHECK(std::abs(region_point(1.0, kPoint, kP) - (-0.182321556793954626)) < 1e-15);
  CHECK(std::abs(region_point(0.0, kPoint, kP) - (-0.0953101798043248600)) < 1e-15);
}

TEST_CASE("boundary_point examples") {
  CHECK(std::abs(boundary_point(0.0, kPoint, kP) - (-0.182321556793954626)) < 1e-15);
  CHECK(std::abs(boundary_point(kPi, kPoint, kP)) < 1e-15);
}

TEST_CASE("boundary points are region points at the unimodular disk parameter") {
  double worst = 0.0;
  for (const JanowskiParams& p : param_grid()) {
    for (cplx z0 : z0_grid()) {
      for (double lam : lambda_grid()) {
        const EvalPoint point(z0, lam);
        for (int k = 1; k <= 256; ++k) {
          const double theta = -kPi + 2.0 * kPi * k / 256;
          const cplx e = std::polar(1.0, theta);
          // Factor of the difference (F')^{B/(A-B)} - c written out by hand.
          const cplx a = (p.B() / std::abs(p.B())) * (z0 * z0 / std::norm(z0)) *
                         (e + lam * std::conj(z0)) / (1.0 + z0 * lam * e);
          CHECK(std::abs(std::abs(a) - 1.0) < 1e-14);
          worst = std::max(worst, std::abs(boundary_point(theta, point, p) - region_point(a, point, p)));
          worst = std::max(worst, std::abs(a - disk_parameter(e, point, p)));
        }
      }
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("principal log never meets the branch cut") {
  std::mt19937_64 gen(3);
  for (const JanowskiParams& p : param_grid()) {
    for (int i = 0; i < 2000; ++i) {
      const double radius = std::abs(p.B()) == 1.0 ? 0.95 : 0.999;
      const EvalPoint point(random_in_disk(gen, radius), std::uniform_real_distribution<double>(0.0, 0.999)(gen));
      const Disk d = variability_disk(point, p);
      const cplx a = random_in_disk(gen, 1.0);
      CHECK((d.center + a * d.radius).real() > 0.0);
    }
  }
}

TEST_CASE("boundary_curve") {
  const BoundaryCurve c4 = boundary_curve(kPoint, kP, 4);
  REQUIRE(c4.size() == 4);
  CHECK(c4.samples.back().theta == kPi);
  CHECK(std::abs(c4.samples.back().value) < 1e-15);
  for (std::size_t i = 1; i < c4.size(); ++i) CHECK(c4.samples[i].theta > c4.samples[i - 1].theta);
  CHECK_THROWS_AS(boundary_curve(kPoint, kP, 2), std::length_error);

  for (const BoundarySample& s : boundary_curve(kPoint, kP, 64).samples) {
    CHECK(contains(s.value, kPoint, kP).status == Verdict::Boundary);
  }

  // lambda = 0: the curve is -Log of the circle |u - 1| = |B||z0|^2 = 0.125.
  for (const BoundarySample& s : boundary_curve(EvalPoint(0.5, 0.0), kP, 128).samples) {
    CHECK(std::abs(std::abs(std::exp(-s.value) - 1.0) - 0.125) < 1e-14);
  }
}

TEST_CASE("contains examples") {
  const MembershipVerdict b = contains(-std::log(1.2), kPoint, kP);
  CHECK(b.status == Verdict::Boundary);
  CHECK(std::abs(b.slack) < 1e-14);
  CHECK(contains(0.0, kPoint, kP).status == Verdict::Boundary);
  const MembershipVerdict in = contains(-std::log(1.125), kPoint, kP);
  CHECK(in.status == Verdict::Interior);
  CHECK(std::abs(in.slack - (-0.5)) < 1e-14);
  CHECK(contains(-std::log(1.5), kPoint, kP).status == Verdict::Outside);

  CHECK_THROWS_AS(contains(0.0, EvalPoint(0.0, 0.5), kP), DegeneratePointError);
  CHECK_THROWS_AS(contains(0.0, EvalPoint(0.5, 1.0), kP), std::domain_error);
  CHECK_THROWS_AS(contains(0.0, kPoint, kP, 0.0), std::domain_error);
}

TEST_CASE("membership consistency across grids") {
  std::mt19937_64 gen(17);
  for (const JanowskiParams& p : param_grid()) {
    for (cplx z0 : z0_grid()) {
      for (double lam : lambda_grid()) {
        const EvalPoint point(z0, lam);
        for (int k = 0; k < 32; ++k) {
          const double theta = -kPi + 2.0 * kPi * (k + 1) / 32;
          CHECK(contains(boundary_point(theta, point, p), point, p).status == Verdict::Boundary);
          const cplx a = std::polar(1.0 - 1e-6 - 0.5 * std::uniform_real_distribution<double>(0, 1)(gen), theta);
          CHECK(contains(region_point(a, point, p), point, p).status == Verdict::Interior);
          CHECK(contains(region_point(1.01 * std::polar(1.0, theta), point, p), point, p).status ==
                Verdict::Outside);
        }
      }
    }
  }
}

TEST_CASE("rotation equivariance of membership") {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const JanowskiParams& p : param_grid()) {
    for (int i = 0; i < 500; ++i) {
      const cplx z0 = random_in_disk(gen, 0.9);
      if (z0 == 0.0) continue;
      const cplx lam = random_in_disk(gen, 0.95);
      const cplx spin = std::polar(1.0, 2.0 * kPi * u(gen));
      const cplx w = p.exponent() * std::log(1.0 + p.B() * random_in_disk(gen, 0.9 * std::abs(z0)));
      const MembershipVerdict v1 = contains(w, EvalPoint(spin * z0, lam), p);
      const MembershipVerdict v2 = contains(w, EvalPoint(z0, lam * spin), p);
      CHECK(v1.status == v2.status);
      CHECK(std::abs(v1.slack - v2.slack) < 1e-12);
    }
  }
}

TEST_CASE("canonical frame preserves membership") {
  const EvalPoint point(cplx(0.2, 0.5), std::polar(0.6, 2.1));
  const EvalPoint canon = canonical_frame(point);
  CHECK(canon.lambda_is_real());
  CHECK(std::abs(canon.lambda().real() - 0.6) < 1e-15);
  for (int k = 0; k < 64; ++k) {
    const cplx w = boundary_point(2.0 * kPi * k / 64, point, kP);
    CHECK(contains(w, canon, kP).status == Verdict::Boundary);
  }
}

TEST_CASE("radius shrinks to the singleton as lambda -> 1") {
  const JanowskiParams p(-0.5, 0.5);
  const cplx z0(0.3, 0.4);
  double prev = INFINITY;
  for (int k = 1; k <= 40; ++k) {
    const Disk d = variability_disk(EvalPoint(z0, 1.0 - std::ldexp(1.0, -k)), p);
    CHECK(d.radius < prev);
    prev = d.radius;
  }
  CHECK(prev < 1e-11);
  const cplx single = singleton_value(EvalPoint(z0, 1.0), p);
  CHECK(std::abs(single - p.exponent() * std::log(1.0 + 0.5 * z0)) < 1e-15);
  CHECK(std::abs(region_point(0.0, EvalPoint(z0, 1.0 - std::ldexp(1.0, -40)), p) - single) < 1e-10);
  CHECK(singleton_value(EvalPoint(0.0, 0.2), p) == cplx(0.0));
  CHECK_THROWS_AS(singleton_value(EvalPoint(z0, 0.5), p), std::domain_error);
}

TEST_CASE("janowski_disk") {
  const Disk d = janowski_disk(kP);
  CHECK(std::abs(d.center - 4.0 / 3.0) < 1e-15);
  CHECK(std::abs(d.radius - 2.0 / 3.0) < 1e-15);
  CHECK(std::abs(d.center.real() - d.radius - 2.0 / 3.0) < 1e-15);
  CHECK(std::abs(d.center.real() + d.radius - 2.0) < 1e-15);

  const JanowskiParams q(-0.9, -0.1);
  const Disk e = janowski_disk(q);
  CHECK(std::abs(e.center.real() - e.radius - (1.0 + q.A()) / (1.0 + q.B())) < 1e-15);
  CHECK(std::abs(e.center.real() + e.radius - (1.0 - q.A()) / (1.0 - q.B())) < 1e-15);
  CHECK_THROWS_AS(janowski_disk(JanowskiParams(-1.0, 1.0)), std::domain_error);
}
