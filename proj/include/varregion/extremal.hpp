#pragma once

// Extremal functions F_{a,lambda}(z) = int_0^z (1 + B s delta(a s, lambda))^{(A-B)/B} ds.

#include "varregion/quadrature.hpp"
#include "varregion/region_core.hpp"

namespace varregion {

/// Parameters of one extremal function. |a| <= 1, |lambda| < 1.
class ExtremalSpec {
 public:
  ExtremalSpec(cplx a, cplx lambda, JanowskiParams params);

  cplx a() const { return a_; }
  cplx lambda() const { return lambda_; }
  const JanowskiParams& params() const { return params_; }

 private:
  cplx a_;
  cplx lambda_;
  JanowskiParams params_;
};

/// F'_{a,lambda}(z) on the principal branch; equals 1 at z = 0.
cplx extremal_fprime(const ExtremalSpec& spec, cplx z);

/// log F'_{a,lambda}(z) = ((A-B)/B) Log(1 + B z delta(a z, lambda)).
cplx extremal_log_fprime(const ExtremalSpec& spec, cplx z);

/// F_{a,lambda}(z) by Gauss-Legendre quadrature along [0, z].
/// Throws ConvergenceError when cfg.abs_tol is not met.
cplx extremal_value(const ExtremalSpec& spec, cplx z, const QuadratureConfig& cfg = {});

/// Same integral split at an intermediate point of the disk: [0, via] then [via, z].
cplx extremal_value_via(const ExtremalSpec& spec, cplx via, cplx z,
                        const QuadratureConfig& cfg = {});

/// Antiderivative of the a = 0 integrand (1 + B lambda s)^{(A-B)/B}, vanishing at 0.
/// Returns z itself for lambda = 0 where the integrand is 1.
cplx closed_form_a0(cplx lambda, const JanowskiParams& params, cplx z);

}  // namespace varregion
