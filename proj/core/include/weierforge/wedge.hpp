#pragma once

#include <cmath>

#include "weierforge/types.hpp"

namespace weierforge {

// Closed half-space {x3 + tan(theta) x1 <= a}, |theta| < pi/2.
struct Wedge {
  double a = 0.0;
  double theta = 0.0;

  Wedge() = default;
  Wedge(double a_, double theta_);

  // x3 + tan(theta) x1 - a: positive outside.
  double level(const Vec3& p) const { return p[2] + std::tan(theta) * p[0] - a; }
};

bool contains(const Wedge& w, const Vec3& p);
double dist_to_wedge(const Wedge& w, const Vec3& p);
// Signed version: negative inside (distance to the boundary plane).
double signed_dist(const Wedge& w, const Vec3& p);
// Distance to the union of the two tilted wedges.
double dist_to_wedge_union(double a, double theta, const Vec3& p);

// Orthogonal projection of p onto the boundary plane.
Vec3 project_to_boundary(const Wedge& w, const Vec3& p);

}  // namespace weierforge
