#include "weierforge/path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "weierforge/error.hpp"

namespace weierforge {

Path::Path(std::vector<cplx> vertices, bool closed) : vertices_(std::move(vertices)), closed_(closed) {
  if (vertices_.size() < 2) throw Error(ErrorKind::InvalidArgument, "path needs at least two vertices");
  if (closed_ && vertices_.size() > 2 && vertices_.front() == vertices_.back()) vertices_.pop_back();
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
    if (vertices_[i] == vertices_[i + 1]) throw Error(ErrorKind::InvalidArgument, "repeated consecutive vertex");
}

Path Path::segment(cplx a, cplx b) { return Path({a, b}, false); }

Path Path::circle(cplx center, double radius, int n, int turns) {
  if (n < 3 || turns < 1 || radius <= 0.0) throw Error(ErrorKind::InvalidArgument, "bad circle parameters");
  std::vector<cplx> v;
  v.reserve(static_cast<std::size_t>(n) * turns);
  for (int t = 0; t < turns; ++t)
    for (int k = 0; k < n; ++k) v.push_back(center + std::polar(radius, 2.0 * kPi * k / n));
  if (turns == 1) return Path(std::move(v), true);
  // Repeated traversal: vertices repeat, but never consecutively.
  Path p;
  p.vertices_ = std::move(v);
  p.closed_ = true;
  return p;
}

Path Path::arc(cplx center, double radius, double t0, double t1, int n) {
  if (n < 1 || t0 == t1) throw Error(ErrorKind::InvalidArgument, "bad arc parameters");
  std::vector<cplx> v;
  for (int k = 0; k <= n; ++k) v.push_back(center + std::polar(radius, t0 + (t1 - t0) * k / n));
  return Path(std::move(v), false);
}

std::size_t Path::segment_count() const {
  return closed_ ? vertices_.size() : vertices_.size() - 1;
}

std::pair<cplx, cplx> Path::segment_at(std::size_t i) const {
  const std::size_t j = (i + 1) % vertices_.size();
  return {vertices_[i], vertices_[j]};
}

double Path::length() const {
  double L = 0.0;
  for (std::size_t i = 0; i < segment_count(); ++i) {
    auto [a, b] = segment_at(i);
    L += std::abs(b - a);
  }
  return L;
}

double Path::bbox_diameter() const {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (cplx v : vertices_) {
    x0 = std::min(x0, v.real());
    x1 = std::max(x1, v.real());
    y0 = std::min(y0, v.imag());
    y1 = std::max(y1, v.imag());
  }
  return std::hypot(x1 - x0, y1 - y0);
}

Path Path::reversed() const {
  std::vector<cplx> v(vertices_.rbegin(), vertices_.rend());
  if (closed_) std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());  // keep the same start point
  Path p;
  p.vertices_ = std::move(v);
  p.closed_ = closed_;
  return p;
}

Path Path::concat(const Path& next) const {
  if (std::abs(end() - next.start()) > 1e-14 * (1.0 + std::abs(end())))
    throw Error(ErrorKind::InvalidArgument, "paths do not join");
  std::vector<cplx> v = vertices_;
  if (closed_) v.push_back(vertices_.front());
  v.insert(v.end(), next.vertices_.begin() + 1, next.vertices_.end());
  if (next.closed_) v.push_back(next.vertices_.front());
  Path p;
  p.vertices_ = std::move(v);
  p.closed_ = false;
  return p;
}

cplx Path::at(double s) const {
  s = std::clamp(s, 0.0, 1.0);
  double remaining = s * length();
  for (std::size_t i = 0; i < segment_count(); ++i) {
    auto [a, b] = segment_at(i);
    const double l = std::abs(b - a);
    if (remaining <= l) return a + (b - a) * (remaining / l);
    remaining -= l;
  }
  return end();
}

std::vector<cplx> Path::samples(int per_segment) const {
  per_segment = std::max(per_segment, 1);
  std::vector<cplx> out;
  for (std::size_t i = 0; i < segment_count(); ++i) {
    auto [a, b] = segment_at(i);
    for (int k = 0; k < per_segment; ++k) out.push_back(a + (b - a) * (double(k) / per_segment));
  }
  out.push_back(end());
  return out;
}

double distance_to_segment(cplx z, cplx a, cplx b) {
  const cplx d = b - a;
  const double L2 = std::norm(d);
  if (L2 == 0.0) return std::abs(z - a);
  const double t = std::clamp(((z - a) * std::conj(d)).real() / L2, 0.0, 1.0);
  return std::abs(z - (a + t * d));
}

double Path::distance_to(cplx z) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < segment_count(); ++i) {
    auto [a, b] = segment_at(i);
    best = std::min(best, distance_to_segment(z, a, b));
  }
  return best;
}

}  // namespace weierforge
