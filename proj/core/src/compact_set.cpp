#include "weierforge/compact_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "weierforge/error.hpp"

namespace weierforge {

double Rect::depth(cplx z) const {
  const double dx = std::min(z.real() - x0, x1 - z.real());
  const double dy = std::min(z.imag() - y0, y1 - z.imag());
  if (dx >= 0.0 && dy >= 0.0) return std::min(dx, dy);
  const double ox = std::max(0.0, -dx), oy = std::max(0.0, -dy);
  return -std::hypot(ox, oy);
}

Path Rect::boundary(int per_side) const {
  per_side = std::max(per_side, 1);
  const cplx c[4] = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
  std::vector<cplx> v;
  for (int s = 0; s < 4; ++s)
    for (int k = 0; k < per_side; ++k) v.push_back(c[s] + (c[(s + 1) % 4] - c[s]) * (double(k) / per_side));
  return Path(std::move(v), true);
}

CompactSet CompactSet::rectangle(Rect r, int n) {
  if (!(r.x1 > r.x0 && r.y1 > r.y0)) throw Error(ErrorKind::InvalidArgument, "degenerate rectangle");
  CompactSet k;
  k.kind_ = Kind::Rectangle;
  k.rects_ = {r};
  k.center_ = r.center();
  k.boundary_samples_ = n;
  return k;
}

CompactSet CompactSet::disk(cplx center, double radius, int n) {
  if (!(radius > 0.0)) throw Error(ErrorKind::InvalidArgument, "disk radius must be positive");
  CompactSet k;
  k.kind_ = Kind::Disk;
  k.center_ = center;
  k.r_out_ = radius;
  k.boundary_samples_ = n;
  return k;
}

CompactSet CompactSet::annulus(cplx center, double r_in, double r_out, int n) {
  if (!(r_in > 0.0 && r_out > r_in)) throw Error(ErrorKind::InvalidArgument, "annulus radii");
  CompactSet k;
  k.kind_ = Kind::Annulus;
  k.center_ = center;
  k.r_in_ = r_in;
  k.r_out_ = r_out;
  k.boundary_samples_ = n;
  return k;
}

CompactSet CompactSet::rectangles_with_arcs(std::vector<Rect> rects, std::vector<Path> arcs, int n) {
  if (rects.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one rectangle");
  CompactSet k;
  k.kind_ = Kind::RectanglesWithArcs;
  k.rects_ = std::move(rects);
  k.arcs_ = std::move(arcs);
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& r : k.rects_) {
    x0 = std::min(x0, r.x0);
    x1 = std::max(x1, r.x1);
    y0 = std::min(y0, r.y0);
    y1 = std::max(y1, r.y1);
  }
  for (const auto& a : k.arcs_)
    for (cplx v : a.vertices()) {
      x0 = std::min(x0, v.real());
      x1 = std::max(x1, v.real());
      y0 = std::min(y0, v.imag());
      y1 = std::max(y1, v.imag());
    }
  k.center_ = {0.5 * (x0 + x1), 0.5 * (y0 + y1)};
  k.boundary_samples_ = n;
  return k;
}

bool CompactSet::contains(cplx z, double tol) const {
  switch (kind_) {
    case Kind::Disk: return std::abs(z - center_) <= r_out_ + tol;
    case Kind::Annulus: {
      const double r = std::abs(z - center_);
      return r >= r_in_ - tol && r <= r_out_ + tol;
    }
    default:
      for (const auto& r : rects_)
        if (r.contains(z, tol)) return true;
      for (const auto& a : arcs_)
        if (a.distance_to(z) <= tol) return true;
      return false;
  }
}

bool CompactSet::in_interior(cplx z, double tol) const {
  switch (kind_) {
    case Kind::Disk: return std::abs(z - center_) < r_out_ - tol;
    case Kind::Annulus: {
      const double r = std::abs(z - center_);
      return r > r_in_ + tol && r < r_out_ - tol;
    }
    default:
      for (const auto& r : rects_)
        if (r.depth(z) > tol) return true;
      return false;
  }
}

double CompactSet::circumradius() const {
  switch (kind_) {
    case Kind::Disk:
    case Kind::Annulus: return r_out_;
    default: {
      double R = 0.0;
      for (const auto& r : rects_)
        for (cplx c : {cplx(r.x0, r.y0), cplx(r.x1, r.y0), cplx(r.x1, r.y1), cplx(r.x0, r.y1)})
          R = std::max(R, std::abs(c - center_));
      for (const auto& a : arcs_)
        for (cplx v : a.vertices()) R = std::max(R, std::abs(v - center_));
      return R;
    }
  }
}

double CompactSet::diameter() const {
  if (kind_ == Kind::Disk || kind_ == Kind::Annulus) return 2.0 * r_out_;
  double best = 0.0;
  std::vector<cplx> pts;
  for (const auto& r : rects_)
    for (cplx c : {cplx(r.x0, r.y0), cplx(r.x1, r.y0), cplx(r.x1, r.y1), cplx(r.x0, r.y1)}) pts.push_back(c);
  for (const auto& a : arcs_) pts.insert(pts.end(), a.vertices().begin(), a.vertices().end());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, std::abs(pts[i] - pts[j]));
  return best;
}

Frame CompactSet::frame() const { return Frame{center_, circumradius()}; }

std::vector<Path> CompactSet::boundary_loops() const {
  const int n = std::max(boundary_samples_, 16);
  switch (kind_) {
    case Kind::Disk: return {Path::circle(center_, r_out_, n)};
    case Kind::Annulus: return {Path::circle(center_, r_out_, n), Path::circle(center_, r_in_, n)};
    default: {
      std::vector<Path> loops;
      double perim = 0.0;
      for (const auto& r : rects_) perim += 2.0 * (r.width() + r.height());
      for (const auto& r : rects_) {
        const int per_side = std::max(4, int(std::ceil(n * (r.width() + r.height()) / (2.0 * perim))));
        loops.push_back(r.boundary(per_side));
      }
      return loops;
    }
  }
}

std::vector<cplx> CompactSet::boundary_points() const {
  std::vector<cplx> pts;
  for (const auto& loop : boundary_loops()) {
    const auto& v = loop.vertices();
    pts.insert(pts.end(), v.begin(), v.end());
  }
  for (const auto& a : arcs_) {
    const auto s = a.samples(std::max(2, boundary_samples_ / (8 * int(a.segment_count()))));
    pts.insert(pts.end(), s.begin(), s.end());
  }
  return pts;
}

bool CompactSet::admissible(double tol) const {
  if (kind_ != Kind::RectanglesWithArcs) return true;
  for (std::size_t i = 0; i < rects_.size(); ++i)
    for (std::size_t j = i + 1; j < rects_.size(); ++j) {
      const auto &a = rects_[i], &b = rects_[j];
      if (a.x0 <= b.x1 && b.x0 <= a.x1 && a.y0 <= b.y1 && b.y0 <= a.y1) return false;
    }
  for (const auto& arc : arcs_) {
    const auto s = arc.samples(32);
    // Interior samples must stay outside every rectangle; the endpoints must
    // lie on rectangle boundaries.
    for (std::size_t k = 1; k + 1 < s.size(); ++k)
      for (const auto& r : rects_)
        if (r.depth(s[k]) > -tol) return false;
    for (cplx e : {arc.start(), arc.end()}) {
      bool on = false;
      for (const auto& r : rects_) on = on || std::abs(r.depth(e)) <= tol;
      if (!on) return false;
    }
  }
  return true;
}

}  // namespace weierforge
