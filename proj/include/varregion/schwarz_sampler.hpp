#pragma once

// Exact members of C_lambda(A,B) through the H-infinity parametrization
//   omega(z) = z delta(z psi(z), lambda),   f'(z) = (1 + B omega(z))^{(A-B)/B},
// where psi is an analytic self-map of the closed disk bounded by 1.

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "varregion/region_core.hpp"

namespace varregion {

struct ConstantInner {
  cplx value;  // |value| <= 1
};

struct MonomialInner {
  int degree;  // >= 0
  cplx coeff;  // |coeff| <= 1
};

/// scale * rotation * prod (z - zero) / (1 - conj(zero) z).
struct BlaschkeInner {
  std::vector<cplx> zeros;  // |zero| < 1
  cplx rotation{1.0, 0.0};  // |rotation| = 1
  double scale = 1.0;       // in [0, 1]
};

/// Analytic self-map of the disk with sup norm <= 1 by construction.
class InnerFunction {
 public:
  using Form = std::variant<ConstantInner, MonomialInner, BlaschkeInner>;

  /// Throws std::domain_error if the form violates its bound.
  explicit InnerFunction(Form form);

  static InnerFunction constant(cplx c) { return InnerFunction(ConstantInner{c}); }
  static InnerFunction monomial(int degree, cplx coeff) {
    return InnerFunction(MonomialInner{degree, coeff});
  }
  static InnerFunction blaschke(std::vector<cplx> zeros, cplx rotation = 1.0, double scale = 1.0) {
    return InnerFunction(BlaschkeInner{std::move(zeros), rotation, scale});
  }

  const Form& form() const { return form_; }
  /// True for a constant of modulus one, which reproduces an extremal function.
  bool is_unimodular_constant() const;

  friend bool operator==(const InnerFunction& a, const InnerFunction& b);

 private:
  Form form_;
};

/// psi(z) for |z| <= 1.
cplx inner_eval(const InnerFunction& psi, cplx z);

/// Constant psi when complexity is 0, otherwise a Blaschke product with
/// `complexity` zeros of modulus <= zero_radius. Deterministic in (seed, complexity).
InnerFunction sample_inner(std::uint64_t seed, int complexity, double zero_radius = 0.9);

/// Schwarz function omega(z) = z delta(z psi(z), lambda) with omega'(0) = lambda.
class ConstrainedSchwarz {
 public:
  ConstrainedSchwarz(InnerFunction inner, cplx lambda);

  const InnerFunction& inner() const { return inner_; }
  cplx lambda() const { return lambda_; }

 private:
  InnerFunction inner_;
  cplx lambda_;
};

cplx omega_eval(const ConstrainedSchwarz& s, cplx z);

/// log f'(z) = ((A-B)/B) Log(1 + B omega(z)) for the member generated by s.
cplx member_log_fprime(const ConstrainedSchwarz& s, const JanowskiParams& params, cplx z);

/// 1 + z f''/f' of the member with omega(z) = z^2: (1 + (2A-B) z^2) / (1 + B z^2).
cplx special_curvature(const JanowskiParams& params, cplx z);

/// Uniform double in [0, 1) from the top 53 bits; platform independent.
double uniform01(std::mt19937_64& gen);

/// splitmix64 step; used to derive independent per-sample seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace varregion
