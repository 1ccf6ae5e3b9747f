#pragma once

#include <utility>
#include <vector>

#include "weierforge/types.hpp"

namespace weierforge {

// Piecewise-linear path in the plane. A closed path stores its vertices once;
// the closing segment back to the first vertex is implicit.
class Path {
 public:
  Path() = default;
  Path(std::vector<cplx> vertices, bool closed);

  static Path segment(cplx a, cplx b);
  static Path polyline(std::vector<cplx> vertices) { return Path(std::move(vertices), false); }
  // n-gon inscribed in the circle, counterclockwise from angle 0, traversed `turns` times.
  static Path circle(cplx center, double radius, int n = 256, int turns = 1);
  // Open polygonal arc of the circle from angle t0 to t1 (either orientation).
  static Path arc(cplx center, double radius, double t0, double t1, int n = 128);

  const std::vector<cplx>& vertices() const { return vertices_; }
  bool closed() const { return closed_; }
  std::size_t segment_count() const;
  std::pair<cplx, cplx> segment_at(std::size_t i) const;

  cplx start() const { return vertices_.front(); }
  cplx end() const { return closed_ ? vertices_.front() : vertices_.back(); }
  double length() const;
  double bbox_diameter() const;

  Path reversed() const;
  // Joins this path with another whose start coincides with our end.
  Path concat(const Path& next) const;

  // Point at arclength fraction s in [0, 1].
  cplx at(double s) const;
  // Vertices plus `per_segment - 1` interior points on each segment; for a
  // closed path the start point is repeated at the end.
  std::vector<cplx> samples(int per_segment) const;
  // Shortest distance from z to the path.
  double distance_to(cplx z) const;

 private:
  std::vector<cplx> vertices_;
  bool closed_ = false;
};

double distance_to_segment(cplx z, cplx a, cplx b);

}  // namespace weierforge
