#include "varregion/hausdorff.hpp"

#include <boost/geometry.hpp>
#include <boost/geometry/index/rtree.hpp>
#include <cmath>
#include <iterator>
#include <limits>
#include <vector>

namespace varregion {

namespace bg = boost::geometry;
namespace bgi = boost::geometry::index;

using Point = bg::model::point<double, 2, bg::cs::cartesian>;

double directed_hausdorff(std::span<const std::complex<double>> from,
                          std::span<const std::complex<double>> to) {
  if (from.empty()) return 0.0;
  if (to.empty()) return std::numeric_limits<double>::infinity();

  std::vector<Point> pts;
  pts.reserve(to.size());
  for (const auto& q : to) pts.emplace_back(q.real(), q.imag());
  const bgi::rtree<Point, bgi::rstar<16>> tree(pts.begin(), pts.end());

  double worst = 0.0;
  std::vector<Point> hit;
  for (const auto& p : from) {
    hit.clear();
    tree.query(bgi::nearest(Point(p.real(), p.imag()), 1), std::back_inserter(hit));
    const double d = std::hypot(p.real() - bg::get<0>(hit.front()), p.imag() - bg::get<1>(hit.front()));
    if (d > worst) worst = d;
  }
  return worst;
}

HausdorffDistance hausdorff(std::span<const std::complex<double>> a,
                            std::span<const std::complex<double>> b) {
  return {directed_hausdorff(a, b), directed_hausdorff(b, a)};
}

}  // namespace varregion
