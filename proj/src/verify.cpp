#include "varregion/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <stdexcept>

#include "varregion/hausdorff.hpp"
#include "varregion/schwarz_sampler.hpp"

namespace varregion {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt(cplx z) { return "(" + fmt(z.real()) + "," + fmt(z.imag()) + ")"; }

std::string describe(const JanowskiParams& p, cplx z0, cplx lambda) {
  return "A=" + fmt(p.A()) + " B=" + fmt(p.B()) + " z0=" + fmt(z0) + " lambda=" + fmt(lambda);
}

InnerFunction draw_inner(std::uint64_t seed, std::uint64_t index) {
  return sample_inner(mix_seed(seed, index), static_cast<int>(index % 5));
}

cplx random_disk_point(std::mt19937_64& gen, double radius) {
  const double rho = radius * std::sqrt(uniform01(gen));
  return std::polar(rho, 2.0 * kPi * uniform01(gen));
}

// (f')^{B/(A-B)} recovered from a value of log f'.
cplx pullback(cplx log_fprime, const JanowskiParams& params) {
  return std::exp(log_fprime / params.exponent());
}

VerificationReport start(const char* name, double tol) {
  VerificationReport r;
  r.suite_name = name;
  r.tolerance = tol;
  return r;
}

void bump_min(std::map<std::string, double>& m, const std::string& key, double v) {
  auto [it, inserted] = m.try_emplace(key, v);
  if (!inserted) it->second = std::min(it->second, v);
}

void bump_max(std::map<std::string, double>& m, const std::string& key, double v) {
  auto [it, inserted] = m.try_emplace(key, v);
  if (!inserted) it->second = std::max(it->second, v);
}

double cross(cplx u, cplx v) { return u.real() * v.imag() - u.imag() * v.real(); }

int orient(cplx a, cplx b, cplx c) {
  const double x = cross(b - a, c - a);
  return (x > 0) - (x < 0);
}

bool segments_intersect(cplx p1, cplx p2, cplx q1, cplx q2) {
  const int d1 = orient(q1, q2, p1);
  const int d2 = orient(q1, q2, p2);
  const int d3 = orient(p1, p2, q1);
  const int d4 = orient(p1, p2, q2);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  const auto on_segment = [](cplx a, cplx b, cplx c) {
    return std::min(a.real(), b.real()) <= c.real() && c.real() <= std::max(a.real(), b.real()) &&
           std::min(a.imag(), b.imag()) <= c.imag() && c.imag() <= std::max(a.imag(), b.imag());
  };
  return (d1 == 0 && on_segment(q1, q2, p1)) || (d2 == 0 && on_segment(q1, q2, p2)) ||
         (d3 == 0 && on_segment(p1, p2, q1)) || (d4 == 0 && on_segment(p1, p2, q2));
}

}  // namespace

void VerificationReport::record(double violation, const std::string& inputs,
                                const std::string& observed) {
  ++samples;
  if (violation > max_violation) max_violation = violation;
  if (violation > tolerance && witnesses.size() < kMaxWitnesses) {
    witnesses.push_back({inputs, observed});
  }
}

void VerificationReport::finalize() {
  passed = max_violation <= tolerance;
  if (passed) witnesses.clear();
}

VerificationReport merge(const VerificationReport& a, const VerificationReport& b) {
  VerificationReport out = a;
  out.parameter_sets += b.parameter_sets;
  out.samples += b.samples;
  out.max_violation = std::max(a.max_violation, b.max_violation);
  out.tolerance = std::min(a.tolerance, b.tolerance);
  for (const Witness& w : b.witnesses) {
    if (out.witnesses.size() >= VerificationReport::kMaxWitnesses) break;
    out.witnesses.push_back(w);
  }
  for (const auto& [key, value] : b.metrics) {
    auto [it, inserted] = out.metrics.try_emplace(key, value);
    if (inserted) continue;
    // Counters add up; margins keep their extreme.
    if (key.starts_with("count_")) {
      it->second += value;
    } else if (key.starts_with("min_")) {
      it->second = std::min(it->second, value);
    } else {
      it->second = std::max(it->second, value);
    }
  }
  out.finalize();
  return out;
}

VerifyGrid VerifyGrid::defaults() {
  VerifyGrid g;
  g.params = {JanowskiParams(0.0, 0.5), JanowskiParams(-0.5, 0.5), JanowskiParams(-1.0, 1.0),
              JanowskiParams(0.3, 0.7), JanowskiParams(-0.9, -0.1)};
  g.lambdas = {0.0, 0.3, 0.5, 0.9};
  g.z0s = {cplx(0.5, 0.0), cplx(0.3, 0.4), cplx(-0.7, 0.0), cplx(0.0, 0.1)};
  return g;
}

VerificationReport check_prop1(const VerifyGrid& grid, int n_samples, double tol,
                               std::uint64_t seed) {
  VerificationReport rep = start("prop1", tol);
  std::uint64_t index = 0;
  for (const JanowskiParams& params : grid.params) {
    for (cplx z0 : grid.z0s) {
      for (double lam : grid.lambdas) {
        ++rep.parameter_sets;
        const EvalPoint point(z0, lam);
        const Disk disk = variability_disk(point, params);
        const double scale = disk.radius > 0.0 ? disk.radius : 1.0;

        for (int i = 0; i < n_samples; ++i, ++index) {
          const ConstrainedSchwarz member(draw_inner(seed, index), lam);
          const cplx p = pullback(member_log_fprime(member, params, z0), params);
          const double excess = (std::abs(p - disk.center) - disk.radius) / scale;
          rep.record(std::max(0.0, excess), describe(params, z0, lam) + " member=" + std::to_string(index),
                     "|p-c|-r relative " + fmt(excess));
          if (!member.inner().is_unimodular_constant()) bump_min(rep.metrics, "min_interior_margin", -excess);
        }

        // Equality case: psi == e^{i theta}.
        for (int j = 0; j < 16; ++j) {
          const double theta = -kPi + 2.0 * kPi * (j + 1) / 16.0;
          const ConstrainedSchwarz extremal(InnerFunction::constant(std::polar(1.0, theta)), lam);
          const cplx p = pullback(member_log_fprime(extremal, params, z0), params);
          const double dev = std::abs(std::abs(p - disk.center) - disk.radius) / scale;
          rep.record(dev, describe(params, z0, lam) + " extremal theta=" + fmt(theta),
                     "||p-c|-r| relative " + fmt(dev));
          bump_max(rep.metrics, "max_extremal_deviation", dev);
        }
      }
    }
  }
  rep.finalize();
  return rep;
}

VerificationReport check_corollary0(const std::vector<JanowskiParams>& params, int n_samples,
                                    double tol, std::uint64_t seed) {
  VerificationReport rep = start("corollary0", tol);
  std::uint64_t index = 0;
  for (const JanowskiParams& p : params) {
    ++rep.parameter_sets;
    const double absB = std::abs(p.B());
    for (int i = 0; i < n_samples; ++i, ++index) {
      std::mt19937_64 gen(mix_seed(seed ^ 0xC0u, index));
      const cplx z = random_disk_point(gen, 0.95);
      const double bound = absB * std::norm(z);
      if (bound == 0.0) continue;
      const ConstrainedSchwarz member(draw_inner(seed, index), 0.0);
      const double lhs = std::abs(pullback(member_log_fprime(member, p, z), p) - 1.0);
      const double excess = (lhs - bound) / bound;
      rep.record(std::max(0.0, excess), "A=" + fmt(p.A()) + " B=" + fmt(p.B()) + " z=" + fmt(z),
                 "relative excess " + fmt(excess));

      // Sharpness: a unimodular constant reaches |B||z|^2.
      const ConstrainedSchwarz sharp(InnerFunction::constant(std::polar(1.0, 2.0 * kPi * uniform01(gen))), 0.0);
      const double eq = std::abs(pullback(member_log_fprime(sharp, p, z), p) - 1.0);
      const double dev = std::abs(eq - bound);
      rep.record(dev > 1e-12 ? dev : 0.0, "sharpness A=" + fmt(p.A()) + " B=" + fmt(p.B()) + " z=" + fmt(z),
                 "| |p-1| - |B||z|^2 | = " + fmt(dev));
      bump_max(rep.metrics, "max_sharpness_deviation", dev);
    }
  }
  rep.finalize();
  return rep;
}

VerificationReport check_unit_lambda(const std::vector<JanowskiParams>& params,
                                     const std::vector<cplx>& z0s, double tol) {
  VerificationReport rep = start("unit-lambda", tol);
  const std::vector<cplx> unit_lambdas = {1.0, -1.0, cplx(0.0, 1.0), std::polar(1.0, 2.0)};
  for (const JanowskiParams& p : params) {
    for (cplx z0 : z0s) {
      for (cplx lam : unit_lambdas) {
        ++rep.parameter_sets;
        const EvalPoint point(z0, lam);
        const cplx single = singleton_value(point, p);
        const std::string where = describe(p, z0, lam);

        // omega(z) = lambda z gives f'(z0) = (1 + B lambda z0)^{(A-B)/B} directly.
        const cplx fprime = std::pow(1.0 + p.B() * lam * z0, p.exponent());
        const double direct_gap = std::abs(std::exp(single) - fprime) / std::abs(fprime);
        rep.record(direct_gap, where, "singleton vs omega = lambda z: " + fmt(direct_gap));

        // Shrinking disks along lambda_k = 1 - 2^-k in the rotated frame.
        const cplx z_rot = lam * z0;
        double prev_r = std::numeric_limits<double>::infinity();
        double last_gap = 0.0;
        for (int k = 1; k <= 40; ++k) {
          const double lam_k = 1.0 - std::ldexp(1.0, -k);
          const EvalPoint near(z_rot, lam_k);
          const Disk d = variability_disk(near, p);
          if (!(d.radius < prev_r) && d.radius != 0.0) {
            rep.record(1.0, where + " k=" + std::to_string(k), "radius not decreasing: " + fmt(d.radius));
          }
          prev_r = d.radius;
          last_gap = 0.0;
          for (cplx a : {cplx(1.0), cplx(-1.0), cplx(0.0, 1.0), cplx(0.0, -1.0), cplx(0.0)}) {
            last_gap = std::max(last_gap, std::abs(region_point(a, near, p) - single));
          }
        }
        rep.record(last_gap, where, "distance of V at lambda=1-2^-40 to singleton " + fmt(last_gap));
        bump_max(rep.metrics, "max_limit_gap", last_gap);
      }
    }
    // z0 = 0 collapses to {0} for every lambda.
    for (cplx lam : {cplx(0.0), cplx(0.5), cplx(1.0), cplx(0.0, -1.0)}) {
      const cplx v = singleton_value(EvalPoint(0.0, lam), p);
      rep.record(std::abs(v), "z0=0 lambda=" + fmt(lam), "value " + fmt(v));
    }
  }
  rep.finalize();
  return rep;
}

VerificationReport check_rotation(const VerifyGrid& grid, const std::vector<double>& thetas,
                                  int n_samples, double tol, std::uint64_t seed) {
  VerificationReport rep = start("rotation", tol);
  const std::size_t n_points = grid.z0s.size() * grid.lambdas.size();
  std::uint64_t index = 0;
  for (const JanowskiParams& p : grid.params) {
    ++rep.parameter_sets;
    for (double rot : thetas) {
      const cplx spin = std::polar(1.0, rot);
      for (int i = 0; i < n_samples; ++i, ++index) {
        const std::size_t slot = static_cast<std::size_t>(i) % n_points;
        const cplx z0 = grid.z0s[slot / grid.lambdas.size()];
        const double lam = grid.lambdas[slot % grid.lambdas.size()];
        const EvalPoint rotated_point(spin * z0, lam);
        const EvalPoint rotated_lambda(z0, spin * lam);

        std::mt19937_64 gen(mix_seed(seed ^ 0x20Au, index));
        cplx w;
        const int kind = i % 3;
        if (kind == 0) {
          w = member_log_fprime(ConstrainedSchwarz(draw_inner(seed, index), lam), p, spin * z0);
        } else if (kind == 1) {
          w = boundary_point(2.0 * kPi * uniform01(gen) - kPi, rotated_point, p);
        } else {
          const Disk d = variability_disk(rotated_point, p);
          const cplx a = std::polar(1.05 + 0.25 * uniform01(gen), 2.0 * kPi * uniform01(gen));
          w = p.exponent() * std::log(d.center + a * d.radius);
        }
        const MembershipVerdict v1 = contains(w, rotated_point, p, tol);
        const MembershipVerdict v2 = contains(w, rotated_lambda, p, tol);
        const std::string where = describe(p, z0, lam) + " rotation=" + fmt(rot) + " w=" + fmt(w);
        double violation = v1.status == v2.status ? 0.0 : 1.0;
        if (kind == 1 && v2.status != Verdict::Boundary) violation = 1.0;
        rep.record(violation, where,
                   std::string(to_string(v1.status)) + " vs " + to_string(v2.status));
        rep.metrics["count_" + std::string(to_string(v1.status))] += 1.0;
      }
    }
  }
  rep.finalize();
  return rep;
}

VerificationReport check_coverage(const EvalPoint& point, const JanowskiParams& params, int grid_n,
                                  double tol) {
  if (grid_n < 2) throw std::length_error("check_coverage: grid_n must be >= 2");
  VerificationReport rep = start("coverage", tol);
  rep.parameter_sets = 1;
  const double lam = point.lambda().real();
  const cplx z0 = point.z0();
  const std::string where = describe(params, z0, lam);

  // Unimodular ring first: theta grid matches boundary_curve.
  const BoundaryCurve curve = boundary_curve(point, params, grid_n);
  std::vector<cplx> members;
  std::vector<cplx> region;
  members.reserve(static_cast<std::size_t>(grid_n) * grid_n);
  region.reserve(members.capacity());
  for (int i = grid_n - 1; i >= 0; --i) {
    const double rho = static_cast<double>(i) / (grid_n - 1);
    for (int j = 0; j < grid_n; ++j) {
      const double theta = curve.samples[static_cast<std::size_t>(j)].theta;
      const cplx k = std::polar(rho, theta);
      const cplx m = member_log_fprime(ConstrainedSchwarz(InnerFunction::constant(k), lam), params, z0);
      members.push_back(m);
      region.push_back(region_point(disk_parameter(k, point, params), point, params));
      if (i == grid_n - 1) {
        const double gap = std::abs(m - curve.samples[static_cast<std::size_t>(j)].value);
        rep.record(gap, where + " boundary theta=" + fmt(theta), "ring vs boundary_curve " + fmt(gap));
      }
    }
  }
  const HausdorffDistance h = hausdorff(members, region);
  rep.record(h.forward, where, "members -> region " + fmt(h.forward));
  rep.record(h.backward, where, "region -> members " + fmt(h.backward));
  rep.metrics["hausdorff_forward"] = h.forward;
  rep.metrics["hausdorff_backward"] = h.backward;
  rep.finalize();
  return rep;
}

VerificationReport check_convexity_and_jordan(const BoundaryCurve& curve, double tol) {
  const std::size_t n = curve.size();
  if (n < 16) throw std::length_error("check_convexity_and_jordan: needs at least 16 samples");
  double extent = 0.0;
  for (const BoundarySample& s : curve.samples) {
    extent = std::max(extent, std::abs(s.value - curve.samples.front().value));
  }
  if (extent == 0.0) {
    throw std::length_error("check_convexity_and_jordan: degenerate curve (single point)");
  }

  VerificationReport rep = start("convexity", tol);
  rep.parameter_sets = 1;
  const auto at = [&](std::size_t i) { return curve.samples[i % n].value; };

  double area2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) area2 += cross(at(i), at(i + 1));
  const double orientation = area2 >= 0.0 ? 1.0 : -1.0;

  // Turning is measured as the sine between consecutive edges, so it is scale free.
  for (std::size_t i = 0; i < n; ++i) {
    const cplx e1 = at(i + 1) - at(i);
    const cplx e2 = at(i + 2) - at(i + 1);
    const double len = std::abs(e1) * std::abs(e2);
    if (len == 0.0) {
      rep.record(1.0, "vertex " + std::to_string(i + 1), "repeated vertex");
      continue;
    }
    const double turn = orientation * cross(e1, e2) / len;
    rep.record(std::max(0.0, -turn), "vertex " + std::to_string(i + 1), "signed turn " + fmt(turn));
    bump_min(rep.metrics, "min_signed_turn", turn);
  }

  std::size_t crossings = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the closing edge
      if (segments_intersect(at(i), at(i + 1), at(j), at(j + 1))) {
        ++crossings;
        rep.record(1.0, "edges " + std::to_string(i) + "," + std::to_string(j), "self-intersection");
      }
    }
  }
  rep.metrics["count_crossings"] = static_cast<double>(crossings);
  rep.finalize();
  return rep;
}

VerificationReport check_strict_inclusion(const JanowskiParams& params) {
  const Disk disk = janowski_disk(params);  // throws for B = 1
  VerificationReport rep = start("inclusion", 0.0);
  rep.parameter_sets = 1;
  const double A = params.A();
  const double B = params.B();

  double witness = -1.0;
  for (int k = 1; k <= 52 && witness < 0.0; ++k) {
    const double z = 1.0 - std::ldexp(1.0, -k);
    const cplx curv = special_curvature(params, z);
    ++rep.samples;
    const double outside = std::abs(curv - disk.center) - disk.radius;
    if (outside > 0.0) {
      witness = z;
      rep.metrics["witness_z"] = z;
      rep.metrics["witness_curvature"] = curv.real();
      rep.metrics["distance_outside"] = outside;
    }
  }
  const std::string where = "A=" + fmt(A) + " B=" + fmt(B);
  if (witness < 0.0) rep.record(1.0, where, "no z in (0,1) leaves the Janowski disk");

  const double limit = (1.0 + 2.0 * A - B) / (1.0 + B);
  const double left = (1.0 + A) / (1.0 + B);
  rep.metrics["limit_curvature"] = limit;
  rep.metrics["left_endpoint"] = left;
  if (!(limit < left)) rep.record(1.0, where, "limit " + fmt(limit) + " not below " + fmt(left));
  rep.finalize();
  return rep;
}

VerificationReport check_halfplane_univalence(double B, int n_samples, double tol,
                                              std::uint64_t seed) {
  const JanowskiParams params(0.0, B);
  VerificationReport rep = start("halfplane", tol);
  const double lower = 1.0 / (1.0 + B);
  const std::vector<cplx> lambdas = {0.0, 0.5, cplx(0.3, -0.6), 0.95};
  rep.parameter_sets = lambdas.size();
  double min_re = std::numeric_limits<double>::infinity();
  double min_margin = std::numeric_limits<double>::infinity();
  std::uint64_t index = 0;
  for (cplx lam : lambdas) {
    for (int i = 0; i < n_samples; ++i, ++index) {
      std::mt19937_64 gen(mix_seed(seed ^ 0x4A1Fu, index));
      const cplx z = random_disk_point(gen, 0.999);
      const ConstrainedSchwarz member(draw_inner(seed, index), lam);
      const double re = std::exp(member_log_fprime(member, params, z)).real();
      min_re = std::min(min_re, re);
      min_margin = std::min(min_margin, re - lower);
      const double violation = std::max(0.0, std::max(0.5 - re, lower - re));
      rep.record(violation, "B=" + fmt(B) + " lambda=" + fmt(lam) + " z=" + fmt(z), "Re f' = " + fmt(re));
    }
  }
  rep.metrics["min_re_fprime"] = min_re;
  // Margin above 1/(1+B); stays meaningful when reports for several B are merged.
  rep.metrics["min_margin_over_bound"] = min_margin;
  rep.finalize();
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"prop1",    "corollary0", "unit-lambda",
                                                 "rotation", "coverage",   "convexity",
                                                 "inclusion", "halfplane"};
  return names;
}

namespace {

VerificationReport merge_all(const std::vector<VerificationReport>& parts) {
  VerificationReport out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = merge(out, parts[i]);
  return out;
}

VerificationReport run_one(const std::string& name, const SuiteOptions& opt) {
  const VerifyGrid grid = VerifyGrid::defaults();
  if (name == "prop1") return check_prop1(grid, 256, opt.tol, opt.seed);
  if (name == "corollary0") return check_corollary0(grid.params, 2000, opt.tol, opt.seed);
  if (name == "unit-lambda") return check_unit_lambda(grid.params, grid.z0s, opt.tol);
  if (name == "rotation") {
    std::vector<double> thetas;
    for (int j = 0; j < 16; ++j) thetas.push_back(2.0 * kPi * j / 16.0);
    return check_rotation(grid, thetas, 200, opt.tol, opt.seed);
  }
  if (name == "coverage") {
    std::vector<VerificationReport> parts;
    for (const JanowskiParams& p : grid.params) {
      for (cplx z0 : grid.z0s) {
        for (double lam : grid.lambdas) parts.push_back(check_coverage(EvalPoint(z0, lam), p, 64, 1e-8));
      }
    }
    return merge_all(parts);
  }
  if (name == "convexity") {
    std::vector<VerificationReport> parts;
    for (const JanowskiParams& p : grid.params) {
      for (cplx z0 : grid.z0s) {
        for (double lam : grid.lambdas) {
          const EvalPoint point(z0, lam);
          parts.push_back(check_convexity_and_jordan(boundary_curve(point, p, 256), 1e-10));
        }
      }
    }
    return merge_all(parts);
  }
  if (name == "inclusion") {
    std::vector<VerificationReport> parts;
    for (const JanowskiParams& p : grid.params) {
      if (p.B() < 1.0) parts.push_back(check_strict_inclusion(p));
    }
    return merge_all(parts);
  }
  if (name == "halfplane") {
    std::vector<VerificationReport> parts;
    for (double B : {0.25, 0.5, 1.0}) parts.push_back(check_halfplane_univalence(B, 2000, opt.tol, opt.seed));
    return merge_all(parts);
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "all") {
    std::vector<VerificationReport> out;
    for (const std::string& n : suite_names()) out.push_back(run_one(n, options));
    return out;
  }
  return {run_one(name, options)};
}

}  // namespace varregion
