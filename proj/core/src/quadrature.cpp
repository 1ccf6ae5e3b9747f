#include "weierforge/quadrature.hpp"

#include <cstdlib>
#include <string>

namespace weierforge {

QuadratureOptions QuadratureOptions::from_env() {
  QuadratureOptions o;
  if (const char* s = std::getenv("WEIERFORGE_QUAD_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end == s || !(v > 0.0) || !std::isfinite(v))
      throw Error(ErrorKind::InvalidArgument, std::string("WEIERFORGE_QUAD_TOL is not a positive number: ") + s);
    o.rel_tol = v;
  }
  return o;
}

const GaussLegendre16& GaussLegendre16::get() {
  static const GaussLegendre16 rule = [] {
    GaussLegendre16 r{};
    constexpr int n = 16;
    for (int i = 0; i < n / 2; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      r.x[i] = -x;
      r.x[n - 1 - i] = x;
      r.w[i] = r.w[n - 1 - i] = w;
    }
    return r;
  }();
  return rule;
}

void check_clearance(const std::vector<cplx>& singular_points, const Path& p, const QuadratureOptions& o) {
  const double clearance = o.clearance * std::max(p.bbox_diameter(), 1e-300);
  for (cplx s : singular_points)
    if (p.distance_to(s) <= clearance)
      throw Error(ErrorKind::PoleTooClose, "singularity within clearance of the integration path");
}

cplx integrate(const OneForm& w, const Path& p, const QuadratureOptions& o) {
  check_clearance(w.density.singular_points(), p, o);
  const HoloFunction& f = w.density;
  return integrate_fn<cplx>([&f](cplx z) { return f.eval_unchecked(z); }, p, o);
}

cplx primitive(const OneForm& w, cplx base, cplx target, const Path& p, const QuadratureOptions& o) {
  const double tol = 1e-12 * (1.0 + std::abs(base) + std::abs(target));
  if (std::abs(p.start() - base) > tol || std::abs(p.end() - target) > tol)
    throw Error(ErrorKind::InvalidArgument, "path does not run from base to target");
  if (p.closed()) throw Error(ErrorKind::InvalidArgument, "primitive needs an open path");
  return integrate(w, p, o);
}

LogTrace log_along_fn(const std::function<cplx(cplx)>& f, const Path& p, int per_segment, double zero_tol) {
  LogTrace tr;
  auto value_at = [&](cplx z) {
    const cplx v = f(z);
    if (!(std::abs(v) > zero_tol) || !std::isfinite(std::abs(v)))
      throw Error(ErrorKind::ZeroOnPath, "function vanishes (or is not finite) on the path");
    return v;
  };
  cplx z = p.start();
  cplx v = value_at(z);
  cplx lg = std::log(v);
  tr.points.push_back(z);
  tr.values.push_back(lg);
  const int m = std::max(per_segment, 1);
  for (std::size_t i = 0; i < p.segment_count(); ++i) {
    auto [a, b] = p.segment_at(i);
    for (int k = 1; k <= m; ++k) {
      const cplx target = a + (b - a) * (double(k) / m);
      // Advance from z towards target in steps that keep the argument jump small.
      double frac = 1.0;
      cplx from = z;
      while (true) {
        const cplx zn = from + (target - from) * frac;
        const cplx vn = value_at(zn);
        const double jump = std::arg(vn / v);
        if (std::abs(jump) < kPi / 4 || frac < 1e-9) {
          if (std::abs(jump) >= kPi / 4)
            throw Error(ErrorKind::ZeroOnPath, "argument jumps too fast along the path");
          lg = cplx(std::log(std::abs(vn)), lg.imag() + jump);
          v = vn;
          from = zn;
          if (frac == 1.0) break;
          frac = 1.0;
          continue;
        }
        frac *= 0.5;
      }
      z = target;
      tr.points.push_back(z);
      tr.values.push_back(lg);
    }
  }
  return tr;
}

LogTrace log_along(const HoloFunction& f, const Path& p, int per_segment) {
  const auto sing = f.singular_points();
  for (cplx s : sing)
    if (p.distance_to(s) < 1e-12 * std::max(1.0, p.bbox_diameter()))
      throw Error(ErrorKind::ZeroOnPath, "path passes through a singularity");
  return log_along_fn([&f](cplx z) { return f.eval_unchecked(z); }, p, per_segment, 1e-14);
}

}  // namespace weierforge
