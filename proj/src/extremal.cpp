#include "varregion/extremal.hpp"

#include <cmath>

namespace varregion {

namespace {

void require_open_disk(cplx z, const char* where) {
  if (!(std::abs(z) < 1.0)) throw std::domain_error(std::string(where) + ": requires |z| < 1");
}

}  // namespace

ExtremalSpec::ExtremalSpec(cplx a, cplx lambda, JanowskiParams params)
    : a_(a), lambda_(lambda), params_(params) {
  if (!(std::abs(a) <= 1.0 + 1e-15)) throw std::domain_error("constraint |a| <= 1 violated");
  if (!(std::abs(lambda) < 1.0)) throw std::domain_error("constraint |lambda| < 1 violated");
}

cplx extremal_log_fprime(const ExtremalSpec& spec, cplx z) {
  const JanowskiParams& p = spec.params();
  return p.exponent() * std::log(1.0 + p.B() * z * mobius_delta(spec.a() * z, spec.lambda()));
}

cplx extremal_fprime(const ExtremalSpec& spec, cplx z) {
  require_open_disk(z, "extremal_fprime");
  return std::exp(extremal_log_fprime(spec, z));
}

cplx extremal_value(const ExtremalSpec& spec, cplx z, const QuadratureConfig& cfg) {
  require_open_disk(z, "extremal_value");
  if (z == 0.0) return 0.0;
  return integrate_segment([&spec](cplx s) { return std::exp(extremal_log_fprime(spec, s)); },
                           0.0, z, cfg);
}

cplx extremal_value_via(const ExtremalSpec& spec, cplx via, cplx z, const QuadratureConfig& cfg) {
  require_open_disk(z, "extremal_value_via");
  require_open_disk(via, "extremal_value_via");
  const auto f = [&spec](cplx s) { return std::exp(extremal_log_fprime(spec, s)); };
  return integrate_segment(f, 0.0, via, cfg) + integrate_segment(f, via, z, cfg);
}

cplx closed_form_a0(cplx lambda, const JanowskiParams& params, cplx z) {
  if (!(std::abs(lambda) < 1.0)) throw std::domain_error("closed_form_a0: requires |lambda| < 1");
  require_open_disk(z, "closed_form_a0");
  if (lambda == 0.0) return z;
  const double A = params.A();
  const double B = params.B();
  const cplx base = 1.0 + B * lambda * z;
  if (A == 0.0) return std::log(base) / (B * lambda);
  return (std::exp((A / B) * std::log(base)) - 1.0) / (lambda * A);
}

}  // namespace varregion
