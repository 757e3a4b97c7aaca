#include "varregion/schwarz_sampler.hpp"

#include <cmath>
#include <random>

namespace varregion {

namespace {

// Bound checks allow one rounding step on unimodular values built with polar().
constexpr double kUnitSlack = 1e-15;

struct FormValidator {
  void operator()(const ConstantInner& c) const {
    if (!(std::abs(c.value) <= 1.0 + kUnitSlack)) {
      throw std::domain_error("constant inner function needs |c| <= 1");
    }
  }
  void operator()(const MonomialInner& m) const {
    if (m.degree < 0) throw std::domain_error("monomial inner function needs degree >= 0");
    if (!(std::abs(m.coeff) <= 1.0 + kUnitSlack)) {
      throw std::domain_error("monomial inner function needs |coeff| <= 1");
    }
  }
  void operator()(const BlaschkeInner& b) const {
    for (const cplx& a : b.zeros) {
      if (!(std::abs(a) < 1.0)) throw std::domain_error("Blaschke zeros need |zero| < 1");
    }
    if (std::abs(std::abs(b.rotation) - 1.0) > 1e-12) {
      throw std::domain_error("Blaschke rotation needs |rotation| = 1");
    }
    if (!(b.scale >= 0.0 && b.scale <= 1.0)) {
      throw std::domain_error("Blaschke scale needs 0 <= scale <= 1");
    }
  }
};

}  // namespace

InnerFunction::InnerFunction(Form form) : form_(std::move(form)) {
  std::visit(FormValidator{}, form_);
}

bool InnerFunction::is_unimodular_constant() const {
  const auto* c = std::get_if<ConstantInner>(&form_);
  return c != nullptr && std::abs(std::abs(c->value) - 1.0) <= kUnitSlack;
}

bool operator==(const InnerFunction& a, const InnerFunction& b) {
  if (a.form_.index() != b.form_.index()) return false;
  if (const auto* c = std::get_if<ConstantInner>(&a.form_)) {
    return c->value == std::get<ConstantInner>(b.form_).value;
  }
  if (const auto* m = std::get_if<MonomialInner>(&a.form_)) {
    const auto& n = std::get<MonomialInner>(b.form_);
    return m->degree == n.degree && m->coeff == n.coeff;
  }
  const auto& p = std::get<BlaschkeInner>(a.form_);
  const auto& q = std::get<BlaschkeInner>(b.form_);
  return p.zeros == q.zeros && p.rotation == q.rotation && p.scale == q.scale;
}

cplx inner_eval(const InnerFunction& psi, cplx z) {
  struct Eval {
    cplx z;
    cplx operator()(const ConstantInner& c) const { return c.value; }
    cplx operator()(const MonomialInner& m) const {
      cplx v = m.coeff;
      for (int k = 0; k < m.degree; ++k) v *= z;
      return v;
    }
    cplx operator()(const BlaschkeInner& b) const {
      cplx prod = b.rotation * b.scale;
      for (const cplx& a : b.zeros) prod *= (z - a) / (1.0 - std::conj(a) * z);
      return prod;
    }
  };
  return std::visit(Eval{z}, psi.form());
}

InnerFunction sample_inner(std::uint64_t seed, int complexity, double zero_radius) {
  if (complexity < 0) throw std::domain_error("sample_inner: complexity must be >= 0");
  if (!(zero_radius >= 0.0 && zero_radius < 1.0)) {
    throw std::domain_error("sample_inner: zero radius must lie in [0, 1)");
  }
  std::mt19937_64 gen(seed);
  const double two_pi = 2.0 * kPi;
  if (complexity == 0) {
    // One draw in eight sits on the unit circle and reproduces an extremal.
    const bool unimodular = (gen() & 7u) == 0;
    const double rho = unimodular ? 1.0 : std::sqrt(uniform01(gen));
    return InnerFunction::constant(std::polar(rho, two_pi * uniform01(gen)));
  }
  std::vector<cplx> zeros;
  zeros.reserve(static_cast<std::size_t>(complexity));
  for (int i = 0; i < complexity; ++i) {
    const double rho = zero_radius * std::sqrt(uniform01(gen));
    zeros.push_back(std::polar(rho, two_pi * uniform01(gen)));
  }
  const cplx rotation = std::polar(1.0, two_pi * uniform01(gen));
  const double scale = uniform01(gen);
  return InnerFunction::blaschke(std::move(zeros), rotation, scale);
}

ConstrainedSchwarz::ConstrainedSchwarz(InnerFunction inner, cplx lambda)
    : inner_(std::move(inner)), lambda_(lambda) {
  if (!(std::abs(lambda) < 1.0)) throw std::domain_error("constraint |lambda| < 1 violated");
}

cplx omega_eval(const ConstrainedSchwarz& s, cplx z) {
  return z * mobius_delta(z * inner_eval(s.inner(), z), s.lambda());
}

cplx member_log_fprime(const ConstrainedSchwarz& s, const JanowskiParams& params, cplx z) {
  return params.exponent() * std::log(1.0 + params.B() * omega_eval(s, z));
}

cplx special_curvature(const JanowskiParams& params, cplx z) {
  const cplx z2 = z * z;
  return (1.0 + (2.0 * params.A() - params.B()) * z2) / (1.0 + params.B() * z2);
}

double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace varregion
