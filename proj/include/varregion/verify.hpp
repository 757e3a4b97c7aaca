#pragma once

// Executable checks for the inequalities, identities and equality cases that
// describe V_lambda(z0, A, B). Each suite returns a VerificationReport; a
// report passes exactly when max_violation <= tolerance.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "varregion/region_core.hpp"

namespace varregion {

struct Witness {
  std::string inputs;
  std::string observed;
};

struct VerificationReport {
  std::string suite_name;
  std::size_t parameter_sets = 0;
  std::size_t samples = 0;
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  std::vector<Witness> witnesses;
  /// Measured side quantities (margins, witness locations, counts).
  std::map<std::string, double> metrics;

  /// Records one violation; keeps at most kMaxWitnesses failing inputs.
  void record(double violation, const std::string& inputs, const std::string& observed);
  /// Recomputes `passed`.
  void finalize();

  static constexpr std::size_t kMaxWitnesses = 32;
};

/// Associative, order-independent combination of two reports of one suite.
VerificationReport merge(const VerificationReport& a, const VerificationReport& b);

struct VerifyGrid {
  std::vector<JanowskiParams> params;
  std::vector<cplx> z0s;
  std::vector<double> lambdas;  // real, in [0, 1)

  /// (A,B) in {(0,.5), (-.5,.5), (-1,1), (.3,.7), (-.9,-.1)}, lambda in {0,.3,.5,.9},
  /// z0 in {.5, .3+.4i, -.7, .1i}.
  static VerifyGrid defaults();
};

/// |(f')^{B/(A-B)} - c| <= r for sampled members; equality for extremals.
/// Violations are measured relative to r.
VerificationReport check_prop1(const VerifyGrid& grid, int n_samples, double tol,
                               std::uint64_t seed = 0);

/// lambda = 0: |(f')^{B/(A-B)} - 1| <= |B| |z|^2, with sharpness for unimodular constants.
VerificationReport check_corollary0(const std::vector<JanowskiParams>& params, int n_samples,
                                    double tol, std::uint64_t seed = 0);

/// |lambda| = 1 singletons, z0 = 0, and r(z0, 1 - 2^-k) -> 0 monotonically.
VerificationReport check_unit_lambda(const std::vector<JanowskiParams>& params,
                                     const std::vector<cplx>& z0s, double tol = 1e-9);

/// contains(w, (e^{it} z0, lambda)) == contains(w, (z0, lambda e^{it})) verdict by verdict.
/// n_samples test points per (parameter set, rotation).
VerificationReport check_rotation(const VerifyGrid& grid, const std::vector<double>& thetas,
                                  int n_samples, double tol, std::uint64_t seed = 0);

/// Hausdorff distance between {member with psi == k} and {region_point(a(k))}
/// over a grid_n x grid_n polar grid of the closed disk.
VerificationReport check_coverage(const EvalPoint& point, const JanowskiParams& params, int grid_n,
                                  double tol);

/// Single-signed turning and no self-intersection of the sampled boundary.
/// Throws std::length_error for fewer than 16 samples or a degenerate curve.
VerificationReport check_convexity_and_jordan(const BoundaryCurve& curve, double tol);

/// Finds real z in (0,1) where the curvature of the omega = z^2 member leaves
/// the Janowski disk. Requires B < 1.
VerificationReport check_strict_inclusion(const JanowskiParams& params);

/// A = 0: Re f' > 1/2 (indeed >= 1/(1+B)) for sampled members.
VerificationReport check_halfplane_univalence(double B, int n_samples, double tol,
                                              std::uint64_t seed = 0);

struct SuiteOptions {
  std::uint64_t seed = 0;
  double tol = kDefaultMembershipTol;
};

/// Suite names accepted by run_suite, in run order for "all".
const std::vector<std::string>& suite_names();

/// Runs one named suite (or "all") over the default grids.
/// Throws std::invalid_argument for an unknown name.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace varregion
