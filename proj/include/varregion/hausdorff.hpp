#pragma once

#include <complex>
#include <span>

namespace varregion {

struct HausdorffDistance {
  double forward = 0.0;   // sup over a of dist(a, B)
  double backward = 0.0;  // sup over b of dist(b, A)

  double symmetric() const { return forward > backward ? forward : backward; }
};

/// sup_{p in from} min_{q in to} |p - q|. Empty `to` gives +inf, empty `from` gives 0.
double directed_hausdorff(std::span<const std::complex<double>> from,
                          std::span<const std::complex<double>> to);

HausdorffDistance hausdorff(std::span<const std::complex<double>> a,
                            std::span<const std::complex<double>> b);

}  // namespace varregion
