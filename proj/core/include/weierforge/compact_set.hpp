#pragma once

#include <vector>

#include "weierforge/holo.hpp"
#include "weierforge/path.hpp"
#include "weierforge/types.hpp"

namespace weierforge {

struct Rect {
  double x0, x1, y0, y1;

  bool contains(cplx z, double tol = 0.0) const {
    return z.real() >= x0 - tol && z.real() <= x1 + tol && z.imag() >= y0 - tol && z.imag() <= y1 + tol;
  }
  cplx center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  // Signed distance to the boundary: positive inside.
  double depth(cplx z) const;
  Path boundary(int per_side) const;
};

// Compact planar sets with connected complement, on which approximation runs.
// Rectangles-with-arcs holds one or more disjoint closed rectangles joined by
// polygonal arcs.
class CompactSet {
 public:
  enum class Kind { Rectangle, Disk, Annulus, RectanglesWithArcs };

  static CompactSet rectangle(Rect r, int boundary_samples = 1024);
  static CompactSet disk(cplx center, double radius, int boundary_samples = 1024);
  static CompactSet annulus(cplx center, double r_in, double r_out, int boundary_samples = 1024);
  static CompactSet rectangles_with_arcs(std::vector<Rect> rects, std::vector<Path> arcs,
                                         int boundary_samples = 1024);

  Kind kind() const { return kind_; }
  const std::vector<Rect>& rects() const { return rects_; }
  const std::vector<Path>& arcs() const { return arcs_; }
  cplx center() const { return center_; }
  double r_in() const { return r_in_; }
  double r_out() const { return r_out_; }
  int boundary_samples() const { return boundary_samples_; }

  bool contains(cplx z, double tol = 1e-12) const;
  // True when z is in K at distance > tol from its boundary (arcs have empty interior).
  bool in_interior(cplx z, double tol) const;
  double diameter() const;
  // Radius of the smallest disk about `frame().center` containing K.
  double circumradius() const;
  // Natural chart for approximation on K.
  Frame frame() const;

  // Points covering the topological boundary (sup of holomorphic data on K is
  // attained there). For arcs, points along the arc.
  std::vector<cplx> boundary_points() const;
  // Closed boundary loops, positively oriented for rectangles/disks; for the
  // annulus the outer circle first then the inner circle (both counterclockwise).
  std::vector<Path> boundary_loops() const;
  // Admissibility: each arc touches the rectangles only near its endpoints and
  // leaves them transversally.
  bool admissible(double tol = 1e-9) const;

 private:
  Kind kind_ = Kind::Rectangle;
  std::vector<Rect> rects_;
  std::vector<Path> arcs_;
  cplx center_{};
  double r_in_ = 0.0, r_out_ = 0.0;
  int boundary_samples_ = 1024;
};

}  // namespace weierforge
