#include "weierforge/deform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "weierforge/error.hpp"

namespace weierforge {

Vec3 rotate_vector(const WedgeRotation& r, const Vec3& v) {
  const double c = std::cos(r.angle), s = std::sin(r.angle);
  return {v[0] * c - v[2] * s, v[1], v[0] * s + v[2] * c};
}

Vec3 rotate_point(const WedgeRotation& r, const Vec3& p) {
  const Vec3 q = rotate_vector(r, {p[0], p[1], p[2] - r.height});
  return {q[0], q[1], q[2] + r.height};
}

NullTriple rotate_triple(const NullTriple& t, const WedgeRotation& r) {
  const double c = std::cos(r.angle), s = std::sin(r.angle);
  const HoloFunction& f1 = t.phi[0].density;
  const HoloFunction& f3 = t.phi[2].density;
  NullTriple out;
  out.phi[0] = OneForm(cplx(c) * f1 - cplx(s) * f3);
  out.phi[1] = t.phi[1];
  out.phi[2] = OneForm(cplx(s) * f1 + cplx(c) * f3);
  return out;
}

Immersion rotate_immersion(const Immersion& im, const WedgeRotation& r) {
  Immersion out = im;
  out.triple = rotate_triple(im.triple, r);
  out.base_value = rotate_point(r, im.base_value);
  out.base_conjugate = rotate_vector(r, im.base_conjugate);
  return out;
}

SpinFunctions SpinFunctions::from(const SpinData& sd) {
  return {[g = sd.g](cplx z) { return g.eval_unchecked(z); },
          [f = sd.phi3.density](cplx z) { return f.eval_unchecked(z); }};
}

SpinFunctions SpinFunctions::from(const NullTriple& t) {
  const HoloFunction eta1 = t.phi[0].density - kI * t.phi[1].density;
  const HoloFunction f3 = t.phi[2].density;
  return {[eta1, f3](cplx z) { return f3.eval_unchecked(z) / eta1.eval_unchecked(z); },
          [f3](cplx z) { return f3.eval_unchecked(z); }};
}

double smoothstep5(double u) {
  u = std::clamp(u, 0.0, 1.0);
  return u * u * u * (u * (6.0 * u - 15.0) + 10.0);
}

namespace {

// Continuous lift of t to a log: log|t| (+ i pi for t < 0) when |t| >= 1, and a
// path through modulus (1 + t^2)/2 and argument pi (1 - t)/2 in between.
cplx log_lift(double t) {
  if (std::abs(t) >= 1.0) return {std::log(std::abs(t)), t < 0 ? kPi : 0.0};
  return {std::log(0.5 * (1.0 + t * t)), 0.5 * kPi * (1.0 - t)};
}

}  // namespace

ArcSpin::ArcSpin(SpinFunctions sd, DeformArc arc, double t, int log_samples)
    : sd_(std::move(sd)), arc_(arc), t_(t), ell_(log_lift(t)) {
  if (!std::isfinite(t)) throw Error(ErrorKind::InvalidArgument, "t must be finite");
  if (arc_.S == arc_.T) throw Error(ErrorKind::InvalidArgument, "degenerate arc");
  const int n = std::max(log_samples, 16);
  xs_ = linspace(0.0, 1.0, n + 1);
  l0_.resize(xs_.size());
  double min_gf = std::numeric_limits<double>::infinity(), max_gf = 0.0;
  for (std::size_t k = 0; k < xs_.size(); ++k) {
    const cplx gf = sd_.g(arc_.at(xs_[k])) * f3_chart(xs_[k]);
    const double m = std::abs(gf);
    if (!(m > 1e-300) || !std::isfinite(m)) throw Error(ErrorKind::ZeroOnArc, "g f3 vanishes on the arc");
    min_gf = std::min(min_gf, m);
    max_gf = std::max(max_gf, m);
    const cplx lg = -std::log(gf);
    if (k == 0) {
      l0_[k] = lg;
    } else {
      const double jump = lg.imag() - l0_[k - 1].imag();
      const double wrap = 2.0 * kPi * std::round(jump / (2.0 * kPi));
      l0_[k] = cplx(lg.real(), lg.imag() - wrap);
      if (std::abs(l0_[k].imag() - l0_[k - 1].imag()) > kPi / 2)
        throw Error(ErrorKind::BlendFailure, "argument of g f3 varies too fast along the arc");
    }
  }
  if (min_gf < 1e-14 * max_gf) throw Error(ErrorKind::ZeroOnArc, "g f3 nearly vanishes on the arc");
  A0 = std::min(1.0, 0.5 / max_gf);
  A1 = 1.0 / min_gf;
  A2 = 1.0 + A1;
}

cplx ArcSpin::f3_chart(double x) const { return sd_.f3(arc_.at(x)) * (arc_.T - arc_.S); }

cplx ArcSpin::L0(double x) const {
  const cplx gf = sd_.g(arc_.at(x)) * f3_chart(x);
  const cplx lg = -std::log(gf);
  // Anchor the branch to the tabulated continuous log.
  const double pos = std::clamp(x, 0.0, 1.0) * double(xs_.size() - 1);
  const std::size_t k = std::min(static_cast<std::size_t>(pos), xs_.size() - 2);
  const double fr = pos - double(k);
  const double ref = (1.0 - fr) * l0_[k].imag() + fr * l0_[k + 1].imag();
  const double wrap = 2.0 * kPi * std::round((lg.imag() - ref) / (2.0 * kPi));
  return {lg.real(), lg.imag() - wrap};
}

double ArcSpin::profile(double x) const {
  const double a = 1.0 / 3.0, b = 2.0 / 3.0;
  if (x <= a || x >= b) return 0.0;
  const double w = DeformArc::blend_width(t_);
  return std::min(smoothstep5((x - a) / w), smoothstep5((b - x) / w));
}

cplx ArcSpin::log_rho(double x) const {
  const double s = profile(x);
  if (s == 0.0) return {};
  const cplx L = s * (ell_ + L0(x));
  if (!std::isfinite(L.real()) || !std::isfinite(L.imag()))
    throw Error(ErrorKind::BlendFailure, "blend produced a non-finite log");
  return L;
}

cplx ArcSpin::g_hat(double x) const { return sd_.g(arc_.at(x)) * rho(x); }

CVec3 ArcSpin::psi_hat(double x) const {
  const cplx g = g_hat(x), f = f3_chart(x);
  return {0.5 * (1.0 / g - g) * f, 0.5 * kI * (1.0 / g + g) * f, f};
}

CVec3 ArcSpin::psi(double x) const {
  const cplx g = sd_.g(arc_.at(x)), f = f3_chart(x);
  return {0.5 * (1.0 / g - g) * f, 0.5 * kI * (1.0 / g + g) * f, f};
}

cplx ArcSpin::integrate_x(const std::function<cplx(double, double)>& f, const QuadratureOptions& q) const {
  const double a = 1.0 / 3.0, b = 2.0 / 3.0, w = DeformArc::blend_width(t_);
  auto piece = [&](double lo, double hi, const std::function<cplx(double)>& g) {
    return integrate_fn<cplx>([&](cplx u) { return g(u.real()); }, Path::segment(lo, hi), q);
  };
  cplx acc = piece(0.0, a, [&](double x) { return f(x, 0.0); }) + piece(b, 1.0, [&](double x) { return f(x, 0.0); });
  if (2.0 * w < b - a) {
    acc += w * piece(0.0, 1.0, [&](double u) { return f(a + w * u, smoothstep5(u)); });
    acc += w * piece(0.0, 1.0, [&](double u) { return f(b - w * u, smoothstep5(u)); });
    acc += piece(a + w, b - w, [&](double x) { return f(x, 1.0); });
  } else {
    const double m = 0.5 * (a + b);
    acc += piece(a, m, [&](double x) { return f(x, smoothstep5((x - a) / w)); });
    acc += piece(m, b, [&](double x) { return f(x, smoothstep5((b - x) / w)); });
  }
  return acc;
}

CVec3 ArcSpin::psi_hat_at(double x, double s) const {
  const cplx g = sd_.g(arc_.at(x)) * (s == 0.0 ? cplx(1.0) : std::exp(s * (ell_ + L0(x)))), f = f3_chart(x);
  return {0.5 * (1.0 / g - g) * f, 0.5 * kI * (1.0 / g + g) * f, f};
}

double ArcSpin::re_int_psi1_hat(const QuadratureOptions& q) const {
  return integrate_x([this](double x, double s) { return psi_hat_at(x, s)[0]; }, q).real();
}

double ArcSpin::re_int_psi1(const QuadratureOptions& q) const {
  return integrate_x([this](double x, double) { return psi_hat_at(x, 0.0)[0]; }, q).real();
}

ArcSpin rho_family(const SpinData& sd, const DeformArc& arc, double t) { return ArcSpin(sd, arc, t); }

ShootResult shoot_t(const SpinFunctions& sd, const DeformArc& arc, double target_shift, double tol,
                    const QuadratureOptions& q) {
  if (!std::isfinite(target_shift)) throw Error(ErrorKind::InvalidArgument, "target shift must be finite");
  if (tol < 0.0) tol = 1e-9 * std::abs(target_shift) + 1e-12;
  const double goal = ArcSpin(sd, arc, 1.0).re_int_psi1(q) - target_shift;
  ShootResult res;
  auto residual = [&](double t) {
    ++res.evaluations;
    return ArcSpin(sd, arc, t).re_int_psi1_hat(q) - goal;
  };

  // Scan outward (|t| = 1, 2, 4, ...) and stop at the first sign change
  // between neighbours of the sorted sample set.
  std::map<double, double> seen;
  double lo = 0.0, hi = 0.0, rlo = 0.0, rhi = 0.0;
  bool found = false;
  auto check = [&](double t) {
    const auto it = seen.find(t);
    for (auto nb : {std::next(it), it}) {
      if (nb == seen.end() || nb == seen.begin()) continue;
      const auto pr = std::prev(nb);
      if ((pr->second < 0) != (nb->second < 0)) {
        lo = pr->first;
        rlo = pr->second;
        hi = nb->first;
        rhi = nb->second;
        found = true;
        return;
      }
    }
  };
  for (int k = 0; k <= 20 && !found; ++k) {
    for (double t : {std::ldexp(1.0, k), -std::ldexp(1.0, k)}) {
      const double r = residual(t);
      if (r == 0.0) {
        res.t0 = res.bracket_lo = res.bracket_hi = t;
        return res;
      }
      seen[t] = r;
      check(t);
      if (found) break;
    }
  }
  if (!found)
    throw Error(ErrorKind::BracketNotFound, "no sign change of the shooting residual for t in [-2^20, 2^20]");

  res.bracket_lo = lo;
  res.bracket_hi = hi;
  double bt = lo, br = rlo;
  if (std::abs(rhi) < std::abs(br)) {
    bt = hi;
    br = rhi;
  }
  for (int it = 0; it < 200 && std::abs(br) >= tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double rm = residual(mid);
    if (std::abs(rm) < std::abs(br)) {
      bt = mid;
      br = rm;
    }
    if ((rm < 0) == (rlo < 0)) {
      lo = mid;
      rlo = rm;
    } else {
      hi = mid;
    }
  }
  res.t0 = bt;
  res.residual = br;
  return res;
}

double choose_lambda(const std::vector<Vec3>& points, const Wedge& target, double margin, int direction) {
  if (direction != 1 && direction != -1) throw Error(ErrorKind::InvalidArgument, "direction must be +1 or -1");
  const double tn = std::tan(target.theta);
  if (!(tn * direction > 0.0))
    throw Error(ErrorKind::WrongSign, "translation along x1 cannot increase the distance for this tilt");
  const double need = margin / std::cos(target.theta);
  double lam = -std::numeric_limits<double>::infinity();
  for (const Vec3& p : points) lam = std::max(lam, (need - target.level(p)) / std::abs(tn));
  if (!(lam >= 0.0)) return 0.0;
  return lam > 0.0 ? 1.01 * lam : 1e-12;
}

}  // namespace weierforge
