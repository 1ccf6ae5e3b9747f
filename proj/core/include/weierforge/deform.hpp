#pragma once

#include <functional>
#include <vector>

#include "weierforge/quadrature.hpp"
#include "weierforge/wedge.hpp"
#include "weierforge/weierstrass.hpp"

namespace weierforge {

// Rotation by `angle` about the line {x1 = 0, x3 = height} (parallel to the
// x2-axis): (x1, x3 - h) -> (x1 cos - (x3 - h) sin, x1 sin + (x3 - h) cos).
// It carries the boundary plane of Pi_h(angle) onto {x3 = h}.
struct WedgeRotation {
  double angle = 0.0;
  double height = 0.0;

  WedgeRotation inverse() const { return {-angle, height}; }
};

Vec3 rotate_point(const WedgeRotation& r, const Vec3& p);
// Linear part only (for differentials and flux vectors).
Vec3 rotate_vector(const WedgeRotation& r, const Vec3& v);
NullTriple rotate_triple(const NullTriple& t, const WedgeRotation& r);
// Rotates triple and base value: immerse(result) = rotate_point(immerse(im)).
Immersion rotate_immersion(const Immersion& im, const WedgeRotation& r);

// Straight arc z(x) = S + x (T - S), x in [0, 1], along which the Gauss map
// is deformed. The blend intervals are [1/3, 1/3 + w] and [2/3 - w, 2/3]
// with w = 1/(4 + t^2).
struct DeformArc {
  cplx S{}, T{};

  cplx at(double x) const { return S + x * (T - S); }
  Path path() const { return Path::segment(S, T); }
  static double blend_width(double t) { return 1.0 / (4.0 + t * t); }
};

// Quintic smoothstep 6u^5 - 15u^4 + 10u^3 clamped to [0, 1].
double smoothstep5(double u);

// The deformed spin data along an arc for one value of t: g_t = g * rho_t,
// phi3 untouched. rho_t = exp(s(x) Lambda_t(x)) where s is the blend profile
// (0 outside [1/3, 2/3], 1 on the plateau) and Lambda_t is a continuous log
// of t / (g f3) in the arc chart, so rho_t is never zero.
// Pointwise spin data (g and the density of phi3). Lets the deformation run on
// data whose Gauss map is only known as phi3 / (phi1 - i phi2).
struct SpinFunctions {
  std::function<cplx(cplx)> g;
  std::function<cplx(cplx)> f3;

  static SpinFunctions from(const SpinData& sd);
  static SpinFunctions from(const NullTriple& t);
};

class ArcSpin {
 public:
  ArcSpin(SpinFunctions sd, DeformArc arc, double t, int log_samples = 256);
  ArcSpin(const SpinData& sd, DeformArc arc, double t, int log_samples = 256)
      : ArcSpin(SpinFunctions::from(sd), arc, t, log_samples) {}

  double t() const { return t_; }
  const DeformArc& arc() const { return arc_; }

  double profile(double x) const;
  cplx log_rho(double x) const;
  cplx rho(double x) const { return std::exp(log_rho(x)); }
  cplx g_hat(double x) const;
  // Densities of the deformed triple with respect to dx.
  CVec3 psi_hat(double x) const;
  CVec3 psi(double x) const;

  // Measured bound constants: A0 <= |rho| <= A1 |t| + A2 on the sampled arc.
  double A0 = 0.0, A1 = 0.0, A2 = 1.0;

  // Re of the integral of psi_hat_1 over [0, 1].
  double re_int_psi1_hat(const QuadratureOptions& q = {}) const;
  double re_int_psi1(const QuadratureOptions& q = {}) const;

 private:
  cplx f3_chart(double x) const;  // f3(z(x)) (T - S)
  cplx L0(double x) const;        // continuous log of 1/(g f3_chart)
  // Integral over x in [0, 1] of f(x, s(x)). Ramps are integrated in their
  // own variable u = (x - edge) / w so that s is exact when w ~ 1/t^2.
  cplx integrate_x(const std::function<cplx(double, double)>& f, const QuadratureOptions& q) const;
  CVec3 psi_hat_at(double x, double s) const;

  SpinFunctions sd_;
  DeformArc arc_;
  double t_;
  cplx ell_;                  // log-lift of t
  std::vector<double> xs_;    // L0 tabulated on a fine grid (continuity anchor)
  std::vector<cplx> l0_;
};

ArcSpin rho_family(const SpinData& sd, const DeformArc& arc, double t);

struct ShootResult {
  double t0 = 0.0;
  double residual = 0.0;
  double bracket_lo = 0.0, bracket_hi = 0.0;
  int evaluations = 0;
};

// t0 with Re int psi_hat_1(t0) = Re int psi_1 - target_shift along the arc.
// Scans t in +-{1, 2, 4, ..., 2^20} for a sign change, then bisects.
ShootResult shoot_t(const SpinFunctions& sd, const DeformArc& arc, double target_shift, double tol = -1.0,
                    const QuadratureOptions& q = {});
inline ShootResult shoot_t(const SpinData& sd, const DeformArc& arc, double target_shift, double tol = -1.0,
                           const QuadratureOptions& q = {}) {
  return shoot_t(SpinFunctions::from(sd), arc, target_shift, tol, q);
}

// Minimal lambda >= 0 such that every point translated by (direction * lambda, 0, 0)
// lies at distance > margin from the target wedge, with 1% headroom.
// direction is +1 or -1; WrongSign if that translation cannot increase the distance.
double choose_lambda(const std::vector<Vec3>& points, const Wedge& target, double margin, int direction = -1);

}  // namespace weierforge
