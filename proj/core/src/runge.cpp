#include "weierforge/runge.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "weierforge/error.hpp"
#include "weierforge/refit.hpp"

namespace weierforge {

namespace {

std::vector<int> degree_schedule(const RungeOptions& opt) {
  if (opt.fixed_degree >= 0) return {opt.fixed_degree};
  std::vector<int> s;
  for (int n = 0; n <= opt.max_degree; n += (n < 24 ? 1 : 4)) s.push_back(n);
  if (s.back() != opt.max_degree) s.push_back(opt.max_degree);
  return s;
}

double sup_diff(const std::vector<cplx>& pts, const std::function<cplx(cplx)>& a,
                const std::function<cplx(cplx)>& b) {
  double m = 0.0;
  for (cplx z : pts) m = std::max(m, std::abs(a(z) - b(z)));
  return m;
}

void check_divisor(const Divisor& D, const CompactSet& K) {
  if (!D.is_integral()) throw Error(ErrorKind::BadDivisor, "divisor must be integral");
  const double tol = 1e-9 * K.diameter();
  for (const auto& e : D.entries())
    if (!K.in_interior(e.point, tol)) throw Error(ErrorKind::BadDivisor, "divisor point not interior to K");
}

// Polynomial H (in frame fr) with H^(j)(q) = r^(j)(q) for (q, m) in D, j < m,
// where r = f - p. Confluent Vandermonde solve in the local coordinate.
HoloFunction hermite_correction(const HoloFunction& f, const HoloFunction& p, const Divisor& D, const Frame& fr) {
  const int M = D.degree();
  if (M == 0) return HoloFunction{};
  int max_m = 0;
  for (const auto& e : D.entries()) max_m = std::max(max_m, e.multiplicity);
  std::vector<HoloFunction> df{f}, dp{p};
  for (int j = 1; j < max_m; ++j) {
    df.push_back(df.back().derivative());
    dp.push_back(dp.back().derivative());
  }
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(M, M);
  Eigen::VectorXcd rhs(M);
  int row = 0;
  for (const auto& e : D.entries()) {
    const cplx w = fr.to_local(e.point);
    for (int j = 0; j < e.multiplicity; ++j, ++row) {
      const std::size_t ju = static_cast<std::size_t>(j);
      rhs(row) = (df[ju].eval(e.point) - dp[ju].eval(e.point)) * std::pow(fr.scale, j);
      for (int k = j; k < M; ++k) {
        double falling = 1.0;
        for (int i = 0; i < j; ++i) falling *= (k - i);
        A(row, k) = falling * std::pow(w, k - j);
      }
    }
  }
  const Eigen::VectorXcd c = A.fullPivLu().solve(rhs);
  std::vector<cplx> coeffs(c.data(), c.data() + M);
  return HoloFunction(Laurent(0, std::move(coeffs)), fr);
}

// Taylor coefficients of f about the frame center (in the local coordinate)
// by the trapezoidal Cauchy formula on a circle of radius rho (local units).
std::vector<cplx> cauchy_taylor(const HoloFunction& f, const Frame& fr, double rho, int npts, int nmax) {
  std::vector<cplx> vals(static_cast<std::size_t>(npts));
  for (int j = 0; j < npts; ++j)
    vals[static_cast<std::size_t>(j)] = f.eval_unchecked(fr.to_global(std::polar(rho, 2.0 * kPi * j / npts)));
  std::vector<cplx> a(static_cast<std::size_t>(nmax + 1));
  for (int k = 0; k <= nmax; ++k) {
    cplx s{};
    for (int j = 0; j < npts; ++j) s += vals[static_cast<std::size_t>(j)] * std::polar(1.0, -2.0 * kPi * k * j / npts);
    a[static_cast<std::size_t>(k)] = s / (double(npts) * std::pow(rho, k));
  }
  return a;
}

Frame annulus_fit_frame(const CompactSet& K) { return Frame{K.center(), std::sqrt(K.r_in() * K.r_out())}; }

}  // namespace

Approximation approx_with_divisor(const HoloFunction& f, const CompactSet& K, const Divisor& D, double eps,
                                  const RungeOptions& opt) {
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  check_divisor(D, K);
  for (cplx s : f.singular_points())
    if (K.contains(s, 1e-9 * K.diameter()))
      throw Error(ErrorKind::InvalidArgument, "f has a singularity on K");

  if (f.is_polynomial()) {
    Approximation out;
    out.f = f;
    out.degree = f.is_zero() ? 0 : f.laurent().highest();
    out.method = "identity";
    return out;
  }

  const Frame fr = K.frame();
  const auto pts = K.boundary_points();
  auto fv = [&f](cplx z) { return f.eval_unchecked(z); };
  const auto schedule = degree_schedule(opt);
  const int nmax = schedule.back();

  auto finish = [&](HoloFunction p, int n, const char* method) -> Approximation {
    HoloFunction H = hermite_correction(f, p, D, fr);
    Approximation a;
    a.hermite_size = 0.0;
    for (cplx z : pts) a.hermite_size = std::max(a.hermite_size, std::abs(H.eval_unchecked(z)));
    a.f = p + H;
    a.degree = std::max(n, D.degree() - 1);
    a.sup_error = sup_diff(pts, fv, [&a](cplx z) { return a.f.eval_unchecked(z); });
    a.method = method;
    return a;
  };

  Approximation best;
  best.sup_error = std::numeric_limits<double>::infinity();

  // Taylor truncation when the nearest singularity lies outside the circumdisk.
  double d = std::numeric_limits<double>::infinity();
  for (cplx s : f.singular_points()) d = std::min(d, std::abs(s - fr.center) / fr.scale);
  if (d > 1.0 + 1e-9) {
    const double rho = std::isfinite(d) ? std::sqrt(d) : 2.0;
    const auto a = cauchy_taylor(f, fr, rho, std::max(opt.cauchy_points, 4 * nmax + 8), nmax);
    for (int n : schedule) {
      std::vector<cplx> c(a.begin(), a.begin() + n + 1);
      Approximation t = finish(HoloFunction(Laurent(0, std::move(c)), fr), n, "taylor");
      if (t.sup_error < eps) return t;
      if (t.sup_error < best.sup_error) best = t;
    }
  }
  // Least squares on the boundary samples.
  for (int n : schedule) {
    if (static_cast<std::size_t>(n + 1) > pts.size()) break;
    const FitResult r = fit_laurent(pts, [&] {
      std::vector<cplx> v(pts.size());
      std::transform(pts.begin(), pts.end(), v.begin(), fv);
      return v;
    }(), fr, 0, n);
    Approximation t = finish(HoloFunction(r.coeffs, fr), n, "least-squares");
    if (t.sup_error < eps) return t;
    if (t.sup_error < best.sup_error) best = t;
  }
  throw Error(ErrorKind::DegreeBudgetExceeded,
              "no polynomial of degree <= " + std::to_string(nmax) + " reaches eps; best error " +
                  std::to_string(best.sup_error));
}

int argument_principle(const HoloFunction& f, const Path& loop) {
  return log_along(f, loop, 4).winding();
}

Divisor zeros_inside(const HoloFunction& f, const Path& loop, const QuadratureOptions& q) {
  int poles = 0;
  cplx pole_at{};
  const Divisor polar = f.pole_divisor();
  for (const auto& e : polar.entries()) {
    // Poles only live at the frame center; count them if the loop winds around it.
    const auto tr = log_along_fn([&](cplx z) { return z - e.point; }, loop, 4);
    if (tr.winding() != 0) {
      poles += e.multiplicity;
      pole_at = e.point;
    }
  }
  const int N = argument_principle(f, loop) + poles;
  if (N < 0) throw Error(ErrorKind::InvalidArgument, "negative zero count inside loop");
  if (N == 0) return {};

  const HoloFunction df = f.derivative();
  auto logder = [&](cplx z) { return df.eval_unchecked(z) / f.eval_unchecked(z); };
  // Power sums s_k = sum of z_j^k over zeros (poles subtracted back out).
  std::vector<cplx> s(static_cast<std::size_t>(N + 1));
  for (int k = 1; k <= N; ++k) {
    const cplx I = integrate_fn<cplx>([&](cplx z) { return std::pow(z, k) * logder(z); }, loop, q);
    s[static_cast<std::size_t>(k)] = I / (2.0 * kPi * kI) + double(poles) * std::pow(pole_at, k);
  }
  // Newton's identities: elementary symmetric e_k, then prod (z - z_j).
  std::vector<cplx> e(static_cast<std::size_t>(N + 1));
  e[0] = 1.0;
  for (int k = 1; k <= N; ++k) {
    cplx acc{};
    for (int i = 1; i <= k; ++i) acc += (i % 2 ? 1.0 : -1.0) * e[static_cast<std::size_t>(k - i)] * s[static_cast<std::size_t>(i)];
    e[static_cast<std::size_t>(k)] = acc / double(k);
  }
  std::vector<cplx> roots;
  if (N == 1) {
    roots.push_back(e[1]);
  } else {
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(N, N);
    for (int i = 1; i < N; ++i) C(i, i - 1) = 1.0;
    for (int k = 1; k <= N; ++k) C(N - k, N - 1) = (k % 2 ? 1.0 : -1.0) * e[static_cast<std::size_t>(k)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C);
    for (int i = 0; i < N; ++i) roots.push_back(es.eigenvalues()(i));
  }
  // Cluster (multiple zeros) and polish simple ones with Newton.
  const double merge = 1e-5 * std::max(1.0, loop.bbox_diameter());
  std::vector<Divisor::Entry> entries;
  for (cplx r : roots) {
    auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& en) { return std::abs(en.point - r) < merge; });
    if (it != entries.end()) {
      it->point = (it->point * double(it->multiplicity) + r) / double(it->multiplicity + 1);
      ++it->multiplicity;
    } else {
      entries.push_back({r, 1});
    }
  }
  for (auto& en : entries) {
    if (en.multiplicity != 1) continue;
    for (int it = 0; it < 20; ++it) {
      cplx v, dv;
      f.eval_with_derivative(en.point, v, dv);
      if (dv == cplx{}) break;
      const cplx step = v / dv;
      en.point -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(en.point))) break;
    }
  }
  return Divisor(std::move(entries));
}

SampledFit fit_on_set(const std::function<cplx(cplx)>& values, const CompactSet& K, double eps,
                      const RungeOptions& opt, const std::vector<cplx>& extra_points) {
  auto pts = K.boundary_points();
  pts.insert(pts.end(), extra_points.begin(), extra_points.end());
  std::vector<cplx> v(pts.size());
  std::transform(pts.begin(), pts.end(), v.begin(), values);
  const bool annulus = K.kind() == CompactSet::Kind::Annulus;
  const Frame fr = annulus ? annulus_fit_frame(K) : K.frame();
  SampledFit best;
  best.sup_error = std::numeric_limits<double>::infinity();
  for (int n : degree_schedule(opt)) {
    const int lo = annulus ? -n : 0;
    if (static_cast<std::size_t>(n - lo + 1) > pts.size()) break;
    const FitResult r = fit_laurent(pts, v, fr, lo, n);
    if (r.sup_error < best.sup_error) best = {r.coeffs, fr, n, r.sup_error};
    if (r.sup_error < eps) return {r.coeffs, fr, n, r.sup_error};
  }
  if (opt.best_effort && std::isfinite(best.sup_error)) return best;
  throw Error(ErrorKind::DegreeBudgetExceeded,
              "sampled fit does not reach eps; best error " + std::to_string(best.sup_error));
}

NonvanishingApproximation approx_nonvanishing(const HoloFunction& f, const CompactSet& K, double eps,
                                              const RungeOptions& opt) {
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  const bool annulus = K.kind() == CompactSet::Kind::Annulus;
  const Frame fr = annulus ? annulus_fit_frame(K) : K.frame();
  const auto pts = K.boundary_points();
  double fmax = 0.0;
  for (cplx z : pts) fmax = std::max(fmax, std::abs(f.eval_unchecked(z)));
  for (cplx z : pts)
    if (!(std::abs(f.eval_unchecked(z)) > 1e-12 * fmax))
      throw Error(ErrorKind::ZeroOnBoundary, "f vanishes on the boundary of K");

  NonvanishingApproximation out;
  // Divisor factor: zeros found per boundary loop; poles must sit at K's center.
  std::vector<Divisor::Entry> div;
  const auto loops = K.boundary_loops();
  if (annulus) {
    // Zeros in the annulus: outer moments minus inner ones.
    Divisor outer = zeros_inside(f, loops[0], opt.quad);
    for (const auto& e : outer.entries())
      if (std::abs(e.point - K.center()) > K.r_in()) div.push_back(e);
  } else {
    for (const auto& loop : loops) {
      const Divisor z = zeros_inside(f, loop, opt.quad);
      div.insert(div.end(), z.entries().begin(), z.entries().end());
    }
    const Divisor polar = f.pole_divisor();
    for (const auto& p : polar.entries()) {
      if (!K.contains(p.point)) continue;
      if (std::abs(p.point - fr.center) > 1e-12 * fr.scale)
        throw Error(ErrorKind::InvalidArgument, "pole of f inside K away from its center");
      div.push_back({p.point, -p.multiplicity});
    }
  }
  out.divisor = Divisor(div);

  Laurent B = Laurent::constant(1.0);
  for (const auto& e : out.divisor.entries()) {
    if (e.multiplicity > 0) {
      const Laurent lin(0, {fr.to_local(e.point) * -1.0, cplx(1.0)});  // w - w_q
      for (int m = 0; m < e.multiplicity; ++m) B = B * lin;
    } else {
      B = B * Laurent::monomial(e.multiplicity, 1.0);
    }
  }
  auto f_over_B = [&](cplx z) { return f.eval_unchecked(z) / B.eval(fr.to_local(z)); };

  if (annulus) {
    const LogTrace inner = log_along_fn(f_over_B, loops[1], 4);
    out.hole_winding = inner.winding();
    B = B * Laurent::monomial(out.hole_winding, 1.0);
  }

  // Continuous log of f / B on the boundary pieces. Each later piece is
  // shifted by a multiple of 2 pi i to agree with the nearest sample already
  // placed (pieces touch: loops and arcs meet at arc endpoints; the annulus
  // gets a radial connector).
  std::vector<cplx> P, L;
  auto place = [&](const LogTrace& t, bool record) {
    cplx shift{};
    if (!P.empty()) {
      std::size_t best = 0;
      double bd = std::numeric_limits<double>::infinity();
      std::size_t which = 0;
      for (std::size_t e = 0; e < t.points.size(); ++e)
        for (std::size_t i = 0; i < P.size(); ++i)
          if (std::abs(P[i] - t.points[e]) < bd) {
            bd = std::abs(P[i] - t.points[e]);
            best = i;
            which = e;
          }
      const double jump = L[best].imag() - t.values[which].imag();
      shift = cplx(0.0, 2.0 * kPi * std::round(jump / (2.0 * kPi)));
    }
    LogTrace placed = t;
    for (auto& v : placed.values) v += shift;
    if (record) {
      P.insert(P.end(), placed.points.begin(), placed.points.end());
      L.insert(L.end(), placed.values.begin(), placed.values.end());
    }
    return placed;
  };
  auto closed_trace = [&](const Path& loop) {
    const LogTrace t = log_along_fn(f_over_B, loop, 2);
    if (std::abs(t.increment().imag()) > 1.0)
      throw Error(ErrorKind::WindingMismatch, "log of f/B fails to close on a boundary loop");
    return t;
  };
  place(closed_trace(loops[0]), true);
  if (annulus) {
    place(log_along_fn(f_over_B, Path::segment(loops[0].start(), loops[1].start()), 32), true);
    place(closed_trace(loops[1]), true);
  } else {
    for (const auto& arc : K.arcs()) place(log_along_fn(f_over_B, arc, 16), true);
    for (std::size_t i = 1; i < loops.size(); ++i) place(closed_trace(loops[i]), true);
  }
  auto fB = HoloFunction(B, fr);
  double best_err = std::numeric_limits<double>::infinity();
  for (int n : degree_schedule(opt)) {
    const int lo = annulus ? -n : 0;
    if (static_cast<std::size_t>(n - lo + 1) > P.size()) break;
    const FitResult r = fit_laurent(P, L, fr, lo, n);
    const HoloFunction g = fB.times_exp(r.coeffs);
    double err = 0.0;
    for (cplx z : pts) err = std::max(err, std::abs(g.eval_unchecked(z) - f.eval_unchecked(z)));
    best_err = std::min(best_err, err);
    if (err < eps) {
      out.f = g;
      out.B = B;
      out.h = r.coeffs;
      out.degree = n;
      out.sup_error = err;
      return out;
    }
  }
  throw Error(ErrorKind::DegreeBudgetExceeded,
              "exponent fit does not reach eps; best error " + std::to_string(best_err));
}

}  // namespace weierforge
