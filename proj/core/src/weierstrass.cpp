#include "weierforge/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "weierforge/error.hpp"
#include "weierforge/refit.hpp"
#include "weierforge/runge.hpp"

namespace weierforge {

std::vector<cplx> NullTriple::singular_points() const {
  std::vector<cplx> s;
  for (const auto& p : phi)
    for (cplx z : p.density.singular_points())
      if (std::find(s.begin(), s.end(), z) == s.end()) s.push_back(z);
  return s;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(static_cast<std::size_t>(std::max(n, 1)));
  if (n <= 1) {
    v[0] = a;
    return v;
  }
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  v.back() = b;
  return v;
}

namespace {

std::vector<cplx> grid_over(const CompactSet& K, int n, const std::vector<cplx>& avoid) {
  double x0, x1, y0, y1;
  if (K.kind() == CompactSet::Kind::Disk || K.kind() == CompactSet::Kind::Annulus) {
    x0 = K.center().real() - K.r_out();
    x1 = K.center().real() + K.r_out();
    y0 = K.center().imag() - K.r_out();
    y1 = K.center().imag() + K.r_out();
  } else {
    x0 = y0 = std::numeric_limits<double>::infinity();
    x1 = y1 = -x0;
    for (const auto& r : K.rects()) {
      x0 = std::min(x0, r.x0);
      x1 = std::max(x1, r.x1);
      y0 = std::min(y0, r.y0);
      y1 = std::max(y1, r.y1);
    }
  }
  const double clear = 1e-6 * K.diameter();
  std::vector<cplx> pts;
  for (double y : linspace(y0, y1, n))
    for (double x : linspace(x0, x1, n)) {
      const cplx z(x, y);
      if (!K.contains(z, 0.0)) continue;
      bool ok = true;
      for (cplx s : avoid) ok = ok && std::abs(z - s) > clear;
      if (ok) pts.push_back(z);
    }
  for (const auto& a : K.arcs()) {
    const auto s = a.samples(8);
    pts.insert(pts.end(), s.begin(), s.end());
  }
  return pts;
}

}  // namespace

TripleCheck check_triple(const NullTriple& t, const CompactSet& K, int n) {
  TripleCheck c;
  c.min_metric = std::numeric_limits<double>::infinity();
  for (cplx z : grid_over(K, n, t.singular_points())) {
    const CVec3 v = t.eval(z);
    const double m = std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]);
    const double q = std::abs(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    c.min_metric = std::min(c.min_metric, m);
    c.max_metric = std::max(c.max_metric, m);
    c.max_nullity_ratio = std::max(c.max_nullity_ratio, m > 0.0 ? q / m : (q > 0.0 ? 1.0 : 0.0));
    ++c.samples;
  }
  return c;
}

void validate_triple(const NullTriple& t, const CompactSet& K) {
  const TripleCheck c = check_triple(t, K);
  if (c.max_nullity_ratio > 1e-10)
    throw Error(ErrorKind::NullityFailure, "sum of squares residual ratio " + std::to_string(c.max_nullity_ratio));
  if (!(c.min_metric > 0.0)) throw Error(ErrorKind::RegularityFailure, "metric density vanishes on the domain");
  // Branch points are isolated and a grid misses them: the metric can only
  // vanish where phi3 does, so check it at the zeros of phi3 inside K.
  const HoloFunction& f3 = t.phi[2].density;
  if (f3.is_zero()) return;
  const auto loops = K.boundary_loops();
  const std::size_t used = K.kind() == CompactSet::Kind::Annulus ? 1 : loops.size();
  for (std::size_t i = 0; i < used; ++i) {
    Divisor zs;
    try {
      zs = zeros_inside(f3, loops[i]);
    } catch (const Error&) {
      continue;  // phi3 vanishes on the loop itself; the grid check stands
    }
    for (const auto& e : zs.entries()) {
      if (e.multiplicity <= 0 || !K.contains(e.point, 1e-9)) continue;
      if (metric_density(t, e.point) <= 1e-12 * c.max_metric)
        throw Error(ErrorKind::RegularityFailure, "branch point near (" + std::to_string(e.point.real()) + ", " +
                                                      std::to_string(e.point.imag()) + ")");
    }
  }
}

NullTriple from_spin_data(const SpinData& sd, const CompactSet& K, bool validate) {
  if (sd.g.is_zero()) throw Error(ErrorKind::InvalidArgument, "Gauss map is identically zero");
  HoloFunction inv_g;
  if (sd.g.has_exact_reciprocal()) {
    inv_g = sd.g.reciprocal();
  } else {
    try {
      const HoloFunction& g = sd.g;
      RungeOptions o;
      o.max_degree = 64;
      const SampledFit r = fit_on_set([&g](cplx z) { return 1.0 / g.eval_unchecked(z); }, K, 1e-13, o);
      double sup = 0.0;
      for (cplx z : K.boundary_points()) sup = std::max(sup, std::abs(1.0 / g.eval_unchecked(z)));
      if (r.sup_error > 1e-9 * sup) throw Error(ErrorKind::RefitFailure, "reciprocal refit too coarse");
      inv_g = HoloFunction(r.coeffs, r.frame);
    } catch (const Error& e) {
      throw Error(ErrorKind::RepresentationOverflow, std::string("1/g not representable on K: ") + e.what());
    }
  }
  const HoloFunction& f3 = sd.phi3.density;
  const HoloFunction a = inv_g * f3;  // eta1 = phi1 - i phi2
  const HoloFunction b = sd.g * f3;   // -eta2
  NullTriple t;
  t.phi[0] = OneForm(0.5 * (a - b));
  t.phi[1] = OneForm(0.5 * kI * (a + b));
  t.phi[2] = sd.phi3;
  if (validate) validate_triple(t, K);
  return t;
}

CVec3 integrate_triple(const NullTriple& t, const Path& p, const QuadratureOptions& q) {
  check_clearance(t.singular_points(), p, q);
  return integrate_fn<CVec3>([&t](cplx z) { return t.eval(z); }, p, q);
}

Vec3 immerse(const Immersion& im, cplx z, const Path& p) {
  const double tol = 1e-12 * (1.0 + std::abs(z) + std::abs(im.base_point));
  if (std::abs(p.start() - im.base_point) > tol || std::abs(p.end() - z) > tol)
    throw Error(ErrorKind::InvalidArgument, "immerse: path must run from the base point to z");
  return im.base_value + integrate_triple(im.triple, p, im.quad).real();
}

Vec3 immerse(const Immersion& im, cplx z) {
  if (z == im.base_point) return im.base_value;
  return immerse(im, z, Path::segment(im.base_point, z));
}

Vec3 flux(const NullTriple& t, const Path& loop, const QuadratureOptions& q) {
  if (!loop.closed()) throw Error(ErrorKind::InvalidArgument, "flux needs a closed loop");
  return integrate_triple(t, loop, q).imag();
}

Vec3 real_period(const NullTriple& t, const Path& loop, const QuadratureOptions& q) {
  if (!loop.closed()) throw Error(ErrorKind::InvalidArgument, "period needs a closed loop");
  return integrate_triple(t, loop, q).real();
}

HoloFunction gauss_map(const NullTriple& t, const CompactSet& K) {
  const HoloFunction eta1 = t.phi[0].density - kI * t.phi[1].density;
  if (eta1.is_zero()) throw Error(ErrorKind::DegenerateTriple, "phi1 - i phi2 vanishes identically");
  const HoloFunction& f3 = t.phi[2].density;
  if (eta1.has_exact_reciprocal()) return f3 * eta1.reciprocal();
  auto ratio = [&](cplx z) { return f3.eval_unchecked(z) / eta1.eval_unchecked(z); };
  RungeOptions o;
  o.max_degree = 96;
  SampledFit r;
  try {
    r = fit_on_set(ratio, K, 1e-12, o);
  } catch (const Error& e) {
    throw Error(ErrorKind::RefitFailure, std::string("Gauss map refit: ") + e.what());
  }
  return HoloFunction(r.coeffs, r.frame);
}

double metric_density(const NullTriple& t, cplx z) {
  const CVec3 v = t.eval(z);
  return std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]);
}

CVec3 conjugate_null_curve(const Immersion& im, cplx z, const Path& p) {
  const CVec3 base{cplx(im.base_value[0], im.base_conjugate[0]), cplx(im.base_value[1], im.base_conjugate[1]),
                   cplx(im.base_value[2], im.base_conjugate[2])};
  if (z == im.base_point && p.start() == p.end() && !p.closed()) return base;
  const double tol = 1e-12 * (1.0 + std::abs(z) + std::abs(im.base_point));
  if (std::abs(p.start() - im.base_point) > tol || std::abs(p.end() - z) > tol)
    throw Error(ErrorKind::InvalidArgument, "conjugate_null_curve: path must run from the base point to z");
  return base + integrate_triple(im.triple, p, im.quad);
}

GridSamples sample_grid(const Immersion& im, std::vector<double> xs, std::vector<double> ys) {
  GridSamples g;
  g.xs = std::move(xs);
  g.ys = std::move(ys);
  const std::size_t nx = g.xs.size(), ny = g.ys.size();
  g.z.resize(nx * ny);
  g.x.resize(nx * ny);
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) g.z[j * nx + i] = cplx(g.xs[i], g.ys[j]);

  auto step = [&](cplx a, cplx b) -> Vec3 {
    if (a == b) return {};
    return integrate_triple(im.triple, Path::segment(a, b), im.quad).real();
  };
  // First column: from the base point to (x0, y0), then upward.
  std::vector<Vec3> col(ny);
  col[0] = immerse(im, g.z[0]);
  for (std::size_t j = 1; j < ny; ++j) col[j] = col[j - 1] + step(g.z[(j - 1) * nx], g.z[j * nx]);
  for (std::size_t j = 0; j < ny; ++j) {
    g.x[j * nx] = col[j];
    for (std::size_t i = 1; i < nx; ++i)
      g.x[j * nx + i] = g.x[j * nx + i - 1] + step(g.z[j * nx + i - 1], g.z[j * nx + i]);
  }
  return g;
}

}  // namespace weierforge
