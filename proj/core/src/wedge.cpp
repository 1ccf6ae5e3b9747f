#include "weierforge/wedge.hpp"

#include <algorithm>

#include "weierforge/error.hpp"

namespace weierforge {

Wedge::Wedge(double a_, double theta_) : a(a_), theta(theta_) {
  if (!(std::abs(theta) < kPi / 2)) throw Error(ErrorKind::InvalidArgument, "wedge tilt must satisfy |theta| < pi/2");
}

bool contains(const Wedge& w, const Vec3& p) { return p[2] + std::tan(w.theta) * p[0] <= w.a; }

double signed_dist(const Wedge& w, const Vec3& p) { return w.level(p) * std::cos(w.theta); }

double dist_to_wedge(const Wedge& w, const Vec3& p) {
  if (contains(w, p)) return 0.0;
  return std::max(0.0, signed_dist(w, p));
}

double dist_to_wedge_union(double a, double theta, const Vec3& p) {
  return std::min(dist_to_wedge(Wedge(a, theta), p), dist_to_wedge(Wedge(a, -theta), p));
}

Vec3 project_to_boundary(const Wedge& w, const Vec3& p) {
  // Unit normal (sin, 0, cos) since the plane is x3 cos + x1 sin = a cos.
  const double s = std::sin(w.theta), c = std::cos(w.theta);
  const double d = signed_dist(w, p);
  return Vec3(p[0] - d * s, p[1], p[2] - d * c);
}

}  // namespace weierforge
