#include "weierforge/builder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "weierforge/error.hpp"
#include "weierforge/runge.hpp"

namespace weierforge {

namespace {

constexpr double kRowTol = 1e-12;
const Rect kD{-2.0, 2.0, 0.0, 2.0};
const cplx kBase{0.0, 1.0};  // P0, inside every D_n

Frame domain_frame() { return Frame{kD.center(), std::hypot(0.5 * kD.width(), 0.5 * kD.height())}; }

NullTriple triple_from_etas(const HoloFunction& eta1, const HoloFunction& eta2, const OneForm& phi3) {
  NullTriple t;
  t.phi[0] = OneForm(0.5 * (eta1 + eta2));
  t.phi[1] = OneForm(0.5 * kI * (eta1 - eta2));
  t.phi[2] = phi3;
  return t;
}

double min_metric_on(const NullTriple& t, const GridSamples& g) {
  double m = std::numeric_limits<double>::infinity();
  for (cplx z : g.z) m = std::min(m, metric_density(t, z));
  return m;
}

double max_metric_on(const NullTriple& t, const GridSamples& g) {
  double m = 0.0;
  for (cplx z : g.z) m = std::max(m, metric_density(t, z));
  return m;
}

}  // namespace

void StageConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(ErrorKind::InvalidArgument, "epsilon must lie in (0, 1)");
  if (max_stage < 1) throw Error(ErrorKind::InvalidArgument, "max_stage must be >= 1");
  if (nx < 2 || ny < 2) throw Error(ErrorKind::InvalidArgument, "grid must be at least 2x2");
  if (!(quad_tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "quad_tol must be positive");
  if (max_retries < 0 || max_degree < 1) throw Error(ErrorKind::InvalidArgument, "bad retry/degree budget");
}

std::string Certificates::first_violation() const {
  if (i && !(*i > 0.0)) return "i";
  if (ii && !(*ii > 0.0)) return "ii";
  if (iii && !(*iii > 0.0)) return "iii";
  if (iv && !(*iv > 0.0)) return "iv";
  return {};
}

std::optional<double> Certificates::margin(const std::string& name) const {
  if (name == "i") return i;
  if (name == "ii") return ii;
  if (name == "iii") return iii;
  if (name == "iv") return iv;
  return std::nullopt;
}

StageFailure::StageFailure(std::string certificate, double margin, StageState attempt, const std::string& detail)
    : Error(ErrorKind::StageFailed, "stage " + std::to_string(attempt.n) + " certificate (" + certificate +
                                        ") margin " + std::to_string(margin) + (detail.empty() ? "" : "; " + detail)),
      cert_(std::move(certificate)),
      margin_(margin),
      attempt_(std::move(attempt)) {}

std::vector<double> grid_xs(const StageConfig& cfg) { return linspace(kD.x0, kD.x1, cfg.nx); }

std::vector<double> grid_ys(const StageConfig& cfg) {
  std::vector<double> ys = linspace(kD.y0, kD.y1, cfg.ny);
  for (int j = 1; j <= cfg.max_stage + 1; ++j) ys.push_back(1.0 / (j + 1));
  std::sort(ys.begin(), ys.end());
  std::vector<double> out;
  for (double y : ys)
    if (out.empty() || y - out.back() > 1e-9) out.push_back(y);
  // Keep the exact reciprocal rows.
  for (double& y : out)
    for (int j = 1; j <= cfg.max_stage + 1; ++j)
      if (std::abs(y - 1.0 / (j + 1)) <= 1e-9) y = 1.0 / (j + 1);
  return out;
}

std::vector<SamplePoint> to_points(const GridSamples& g) {
  std::vector<SamplePoint> p(g.z.size());
  for (std::size_t k = 0; k < g.z.size(); ++k) p[k] = {g.z[k], g.x[k]};
  return p;
}

Certificates certify(int n, double epsilon, const std::vector<SamplePoint>& cur, const std::vector<SamplePoint>* prev,
                     double* sup_diff) {
  Certificates c;
  const double inf = std::numeric_limits<double>::infinity();
  const double top = 1.0 / n;         // lower edge of D_{n-1}
  const double row = 1.0 / (n + 1);  // lower edge of D_n
  if (n >= 2 && prev) {
    if (prev->size() != cur.size()) throw Error(ErrorKind::InvalidArgument, "sample sets differ in size");
    double sup = 0.0;
    for (std::size_t k = 0; k < cur.size(); ++k)
      if (cur[k].z.imag() >= top - kRowTol) sup = std::max(sup, norm(cur[k].x - (*prev)[k].x));
    if (sup_diff) *sup_diff = sup;
    c.i = epsilon / std::ldexp(1.0, n - 1) - sup;
  }
  {
    double m = inf;
    const double tn = std::tan(1.0 / n);
    for (const auto& p : cur)
      if (std::abs(p.z.imag() - row) <= kRowTol) m = std::min(m, p.x[2] + tn * p.x[0] - n);
    if (std::isfinite(m)) c.ii = m;
  }
  if (n >= 2) {
    double m = inf;
    const double t0 = std::tan(1.0 / (n - 1)), t1 = std::tan(1.0 / n);
    for (const auto& p : cur) {
      const double y = p.z.imag();
      if (y >= row - kRowTol && y < top - kRowTol) {
        const double a = p.x[2] + t0 * p.x[0] - (n - 1);
        const double b = p.x[2] + t1 * p.x[0] - n;
        m = std::min(m, std::max(a, b));
      }
    }
    if (std::isfinite(m)) c.iii = m;
  }
  {
    double bound = 1.0;
    for (int j = 1; j <= n - 1; ++j) bound -= epsilon * std::ldexp(1.0, -j);
    double m = inf;
    for (const auto& p : cur)
      if (p.z.imag() >= row - kRowTol && p.x[0] < 0.0) m = std::min(m, p.x[2] - bound);
    if (std::isfinite(m)) {
      c.iv = m;
    } else {
      c.iv_vacuous = true;
    }
  }
  return c;
}

std::vector<LedgerEntry> properness_ledger(int k, double epsilon, const std::vector<SamplePoint>& cur) {
  std::vector<LedgerEntry> out;
  for (int n = 2; n <= k; ++n) {
    LedgerEntry e;
    e.n = n;
    e.bound = n - 1 - 2.0 * epsilon;
    e.min_value = e.escape_value = std::numeric_limits<double>::infinity();
    const double lo = 1.0 / (n + 1), hi = 1.0 / n;
    for (const auto& p : cur) {
      const double x = p.z.real(), y = p.z.imag();
      if (std::abs(x) > 1.0 + kRowTol || y < lo - kRowTol || y >= hi - kRowTol) continue;
      e.min_value = std::min(e.min_value, p.x[2] + std::tan(1.0) * std::abs(p.x[0]));
      e.escape_value = std::min(e.escape_value, p.x[2] + std::tan(1.0 / n) * (std::abs(p.x[0]) + 1.0));
      ++e.points;
    }
    out.push_back(e);
  }
  return out;
}

StageState init_stage(const StageConfig& cfg) {
  cfg.validate();
  const Frame F = domain_frame();
  // Enneper-type data g = c z, phi3 = c' z dz: eta1 = c'/c, eta2 = -c c' z^2.
  const double c = 0.1, cp = 0.01;
  const HoloFunction z = HoloFunction::identity(F);
  const HoloFunction eta1 = HoloFunction::constant(cp / c, F);
  const HoloFunction eta2 = cplx(-c * cp) * (z * z);
  const OneForm phi3(cplx(cp) * z);

  StageState s;
  s.n = 1;
  s.immersion.triple = triple_from_etas(eta1, eta2, phi3);
  s.immersion.base_point = kBase;
  s.immersion.base_value = {};
  s.immersion.domain = CompactSet::rectangle(kD);
  s.immersion.quad.rel_tol = cfg.quad_tol;
  s.quad_tol = cfg.quad_tol;

  // Lift so that min over D_1 of x3 + tan(1) x1 is 1 + lift.
  GridSamples g = sample_grid(s.immersion, grid_xs(cfg), grid_ys(cfg));
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < g.z.size(); ++k)
    if (g.z[k].imag() >= 0.5 - kRowTol) m = std::min(m, g.x[k][2] + std::tan(1.0) * g.x[k][0]);
  const Vec3 shift{0.0, 0.0, 1.0 + cfg.lift - m};
  s.immersion.base_value = shift;
  for (auto& x : g.x) x = x + shift;
  s.samples = std::move(g);
  s.min_metric = min_metric_on(s.immersion.triple, s.samples);
  s.cert = certify(1, cfg.epsilon, to_points(s.samples), nullptr);
  return s;
}

StageState advance_stage(const StageState& prev, const StageConfig& cfg) {
  cfg.validate();
  const int n = prev.n + 1;
  const double eps = cfg.epsilon;
  const WedgeRotation L{1.0 / (n - 1), double(n - 1)};
  const Immersion Y = rotate_immersion(prev.immersion, L);
  const auto xs = grid_xs(cfg);
  const auto ys = grid_ys(cfg);
  GridSamples Yg = prev.samples;
  for (auto& x : Yg.x) x = rotate_point(L, x);

  StageState out;
  out.n = n;

  // mu: smallest verified value in (1/(n+1), 1/n) with Y(Theta) above x3 = n - 1.
  const double top = 1.0 / n, bottom = 1.0 / (n + 1);
  const double floor_step = (top - bottom) / 64.0;
  auto theta_ok = [&](double mu) {
    for (std::size_t k = 0; k < Yg.z.size(); ++k) {
      const double y = Yg.z[k].imag();
      if (y >= mu - kRowTol && y <= top + kRowTol && !(Yg.x[k][2] > n - 1)) return false;
    }
    const GridSamples r = sample_grid(Y, xs, {mu});
    for (const auto& x : r.x)
      if (!(x[2] > n - 1)) return false;
    return true;
  };
  if (!theta_ok(top)) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < Yg.z.size(); ++k)
      if (std::abs(Yg.z[k].imag() - top) <= kRowTol) m = std::min(m, Yg.x[k][2] - (n - 1));
    out.cert = prev.cert;
    throw StageFailure("ii", m, out, "rotated previous stage does not clear x3 = n-1 on y = 1/n");
  }
  double lo = bottom + floor_step, hi = top;
  if (theta_ok(lo)) {
    hi = lo;
  } else {
    while (hi - lo > floor_step) {
      const double mid = 0.5 * (lo + hi);
      if (theta_ok(mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
  }
  const double mu = hi;
  out.mu = mu;

  // lambda from Y(Delta) samples (grid rows below mu plus the row at mu).
  const double zeta = (n - 1) + std::cos(1.0 / n) / std::cos(1.0 / (double(n) * n - n));
  const Wedge target(zeta, -1.0 / (n * (n - 1.0)));
  std::vector<Vec3> delta_pts;
  for (std::size_t k = 0; k < Yg.z.size(); ++k)
    if (Yg.z[k].imag() <= mu + kRowTol) delta_pts.push_back(Yg.x[k]);
  {
    const GridSamples r = sample_grid(Y, xs, {mu});
    delta_pts.insert(delta_pts.end(), r.x.begin(), r.x.end());
  }
  out.lambda = choose_lambda(delta_pts, target, 0.0, -1);

  const HoloFunction eta1 = Y.triple.phi[0].density - kI * Y.triple.phi[1].density;
  const HoloFunction eta2 = Y.triple.phi[0].density + kI * Y.triple.phi[1].density;
  const OneForm& phi3 = Y.triple.phi[2];

  // Arc gamma: vertical segment through Theta near the right mouth.
  std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(n));
  std::uniform_real_distribution<double> pick(0.5, 1.95);
  double x0 = 2.0 - std::max(0.05, top - mu);
  const SpinFunctions sf = SpinFunctions::from(Y.triple);
  std::optional<DeformArc> arc;
  for (int attempt = 0; attempt < 32 && !arc; ++attempt) {
    DeformArc a{cplx(x0, top), cplx(x0, mu)};
    try {
      (void)ArcSpin(sf, a, 1.0);
      arc = a;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ZeroOnArc && e.kind() != ErrorKind::BlendFailure) throw;
      x0 = pick(rng);
    }
  }
  if (!arc) throw Error(ErrorKind::ZeroOnArc, "no arc through Theta with phi3 nonvanishing");
  out.arc_start = arc->S;
  out.arc_end = arc->T;

  QuadratureOptions q;
  q.rel_tol = cfg.quad_tol;
  Laurent h;
  if (out.lambda > 0.0) {
    const ShootResult sh = shoot_t(sf, *arc, out.lambda, cfg.shoot_tol, q);
    out.t0 = sh.t0;
    out.shoot_residual = sh.residual;
  }
  const ArcSpin deformed(sf, *arc, out.t0);

  const CompactSet Lambda =
      CompactSet::rectangles_with_arcs({Rect{kD.x0, kD.x1, top, kD.y1}, Rect{kD.x0, kD.x1, kD.y0, mu}}, {arc->path()});
  auto u = [&](cplx z) -> cplx {
    if (std::abs(z.real() - arc->S.real()) > 1e-12) return 0.0;
    const double x = (z.imag() - arc->S.imag()) / (arc->T.imag() - arc->S.imag());
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return deformed.log_rho(x);
  };
  std::vector<cplx> arc_extra;
  for (double x : linspace(0.0, 1.0, 257)) arc_extra.push_back(arc->at(x));

  const std::vector<SamplePoint> prev_pts = to_points(prev.samples);
  double fit_eps = cfg.initial_fit_eps;
  int last_degree = -1;
  double last_err = -1.0;
  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    out.retries = attempt;
    Laurent hz;
    if (out.lambda > 0.0) {
      RungeOptions ro;
      ro.max_degree = cfg.max_degree;
      ro.best_effort = true;
      const SampledFit fit = fit_on_set(u, Lambda, fit_eps, ro, arc_extra);
      out.fit_degree = fit.degree;
      out.fit_error = fit.sup_error;
      hz = fit.coeffs;
      if (!(fit.frame == Y.triple.phi[0].density.frame()))
        hz = HoloFunction(hz, fit.frame).in_frame(Y.triple.phi[0].density.frame()).laurent();
    }
    Immersion Yhat = Y;
    Yhat.triple = triple_from_etas(eta1.times_exp(-hz), eta2.times_exp(hz), phi3);
    out.immersion = rotate_immersion(Yhat, L.inverse());
    // A high-degree exponent evaluates with rounding noise far above quad_tol;
    // loosen the tolerance rather than give up, since margins are O(1e-3).
    out.quad_tol = cfg.quad_tol;
    for (;;) {
      try {
        Immersion im = out.immersion;
        im.quad.rel_tol = out.quad_tol;
        out.samples = sample_grid(im, xs, ys);
        out.immersion.quad.rel_tol = out.quad_tol;
        break;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::QuadratureNotConverged) throw;
        if (out.quad_tol >= 1e-5)
          throw StageFailure("integration", -out.fit_error, out,
                             "immersion integrals do not converge; fit degree " + std::to_string(out.fit_degree) +
                                 ", fit error " + std::to_string(out.fit_error));
        out.quad_tol *= 100.0;
      }
    }
    const double mn = min_metric_on(out.immersion.triple, out.samples);
    out.min_metric = mn;
    double sup = 0.0;
    out.cert = certify(n, eps, to_points(out.samples), &prev_pts, &sup);
    out.sup_diff_prev = sup;
    if (!(mn > 1e-8 * max_metric_on(out.immersion.triple, out.samples)))
      throw StageFailure("regularity", mn, out, "metric density below the branch-point floor");
    if (out.cert.first_violation().empty()) return out;
    // Another halving only helps if the fit actually changed.
    if (out.fit_degree == last_degree && out.fit_error == last_err) break;
    last_degree = out.fit_degree;
    last_err = out.fit_error;
    fit_eps *= 0.5;
  }
  const std::string which = out.cert.first_violation();
  throw StageFailure(which, *out.cert.margin(which), out,
                     "fit degree " + std::to_string(out.fit_degree) + ", fit error " + std::to_string(out.fit_error));
}

RunResult run(const StageConfig& cfg) {
  cfg.validate();
  RunResult r;
  r.stages.push_back(init_stage(cfg));
  if (const std::string v = r.stages.front().cert.first_violation(); !v.empty()) {
    r.ok = false;
    r.failure_certificate = v;
    r.failure_margin = *r.stages.front().cert.margin(v);
    r.failure_message = "initial stage violates certificate (" + v + ")";
  }
  for (int n = 2; r.ok && n <= cfg.max_stage; ++n) {
    try {
      r.stages.push_back(advance_stage(r.stages.back(), cfg));
    } catch (const StageFailure& f) {
      r.ok = false;
      r.failed_attempt = f.attempt();
      r.failure_certificate = f.certificate();
      r.failure_margin = f.margin();
      r.failure_message = f.what();
    }
  }
  for (auto& s : r.stages) s.ledger = properness_ledger(s.n, cfg.epsilon, to_points(s.samples));
  if (r.failed_attempt && !r.failed_attempt->samples.z.empty())
    r.failed_attempt->ledger = properness_ledger(r.failed_attempt->n, cfg.epsilon, to_points(r.failed_attempt->samples));
  return r;
}

}  // namespace weierforge
