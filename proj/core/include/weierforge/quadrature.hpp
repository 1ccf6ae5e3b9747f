#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "weierforge/error.hpp"
#include "weierforge/holo.hpp"
#include "weierforge/path.hpp"
#include "weierforge/types.hpp"

namespace weierforge {

struct QuadratureOptions {
  double rel_tol = 1e-11;
  int max_depth = 14;
  // Poles closer than clearance * (path bbox diameter) to the path are refused.
  double clearance = 1e-6;

  // Defaults, with rel_tol taken from WEIERFORGE_QUAD_TOL when set.
  static QuadratureOptions from_env();
};

// 16-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre16 {
  std::array<double, 16> x;
  std::array<double, 16> w;
  static const GaussLegendre16& get();
};

inline double magnitude(cplx v) { return std::abs(v); }
inline double magnitude(const CVec3& v) { return abs_sum(v); }

namespace detail {

template <class T, class F>
T gl_segment(const F& f, cplx a, cplx b) {
  const auto& q = GaussLegendre16::get();
  const cplx mid = 0.5 * (a + b), half = 0.5 * (b - a);
  T acc{};
  for (int k = 0; k < 16; ++k) acc = acc + (f(mid + half * q.x[k]) * (q.w[k] * half));
  return acc;
}

template <class T, class F>
double gl_segment_abs(const F& f, cplx a, cplx b) {
  const auto& q = GaussLegendre16::get();
  const cplx mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (int k = 0; k < 16; ++k) acc += magnitude(T(f(mid + half * q.x[k]))) * q.w[k] * std::abs(half);
  return acc;
}

template <class T, class F>
T adaptive(const F& f, cplx a, cplx b, const T& whole, double abs_tol, int depth, const QuadratureOptions& o) {
  const cplx m = 0.5 * (a + b);
  const T left = gl_segment<T>(f, a, m);
  const T right = gl_segment<T>(f, m, b);
  const T both = left + right;
  if (magnitude(both - whole) <= abs_tol) return both;
  if (depth >= o.max_depth)
    throw Error(ErrorKind::QuadratureNotConverged, "adaptive refinement exhausted its depth budget");
  return adaptive<T>(f, a, m, left, 0.5 * abs_tol, depth + 1, o) +
         adaptive<T>(f, m, b, right, 0.5 * abs_tol, depth + 1, o);
}

}  // namespace detail

// Contour integral of a pointwise density f (returning T = cplx or CVec3)
// along p: composite GL16 per segment, each segment refined by recursive
// halving until two levels agree to rel_tol * (integral of |f| |dz|).
template <class T, class F>
T integrate_fn(const F& f, const Path& p, const QuadratureOptions& o = {}) {
  const std::size_t n = p.segment_count();
  double l1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto [a, b] = p.segment_at(i);
    l1 += detail::gl_segment_abs<T>(f, a, b);
  }
  const double total_len = p.length();
  const double tol = o.rel_tol * std::max(l1, 1e-300);
  T acc{};
  for (std::size_t i = 0; i < n; ++i) {
    auto [a, b] = p.segment_at(i);
    const T whole = detail::gl_segment<T>(f, a, b);
    acc = acc + detail::adaptive<T>(f, a, b, whole, tol * std::abs(b - a) / total_len, 0, o);
  }
  return acc;
}

// Throws PoleTooClose if a singular point sits within the clearance of p.
void check_clearance(const std::vector<cplx>& singular_points, const Path& p, const QuadratureOptions& o);

cplx integrate(const OneForm& w, const Path& p, const QuadratureOptions& o = {});
// Integral from base to target along p (p must run between them).
cplx primitive(const OneForm& w, cplx base, cplx target, const Path& p, const QuadratureOptions& o = {});

struct LogTrace {
  std::vector<cplx> points;
  std::vector<cplx> values;  // continuous branch of log f at points
  cplx increment() const { return values.back() - values.front(); }
  // Net winding of f along a closed path.
  int winding() const { return static_cast<int>(std::lround(increment().imag() / (2.0 * kPi))); }
};

// Continuous logarithm of f along p, anchored at the principal value at the
// start. Samples are refined until consecutive arguments differ by < pi/4.
LogTrace log_along(const HoloFunction& f, const Path& p, int per_segment = 8);
LogTrace log_along_fn(const std::function<cplx(cplx)>& f, const Path& p, int per_segment = 8,
                      double zero_tol = 1e-300);

}  // namespace weierforge
