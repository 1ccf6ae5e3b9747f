#include <doctest.h>

#include <random>

#include "weierforge/deform.hpp"
#include "weierforge/error.hpp"

using namespace weierforge;

namespace {
HoloFunction poly(std::map<int, cplx> c) { return HoloFunction::laurent_about(0.0, c); }
SpinData enneper() { return {poly({{1, 1.0}}), OneForm(poly({{1, 1.0}}))}; }
const DeformArc unit_arc{0.0, 1.0};
}  // namespace

TEST_CASE("smoothstep") {
  CHECK(smoothstep5(-1.0) == 0.0);
  CHECK(smoothstep5(2.0) == 1.0);
  CHECK(smoothstep5(0.5) == doctest::Approx(0.5));
}

TEST_CASE("rho is one off the middle third and t/(g f3) on the plateau") {
  const SpinData sd{HoloFunction::constant(2.0), OneForm(HoloFunction::constant(1.0))};
  const ArcSpin a(sd, unit_arc, 6.0);
  for (double x : {0.0, 0.1, 1.0 / 3.0, 2.0 / 3.0, 0.9, 1.0}) CHECK(std::abs(a.rho(x) - 1.0) < 1e-15);
  CHECK(std::abs(a.rho(0.5) - 3.0) < 1e-13);
  CHECK(std::abs(a.g_hat(0.5) - 6.0) < 1e-13);
  // x3 component untouched
  CHECK(std::abs(a.psi_hat(0.5)[2] - a.psi(0.5)[2]) < 1e-15);
  // negative t: continuous log, still t/(g f3) on the plateau
  const ArcSpin n(sd, unit_arc, -6.0);
  CHECK(std::abs(n.rho(0.5) + 3.0) < 1e-13);
}

TEST_CASE("deformed data stays null") {
  const SpinData sd{poly({{0, 1.0}, {1, 0.5}}), OneForm(poly({{0, 2.0}, {2, 1.0}}))};
  const ArcSpin a(sd, {{0.1, 0.0}, {0.9, 0.4}}, 10.0);
  for (double x = 0.0; x <= 1.0; x += 0.05) {
    const CVec3 v = a.psi_hat(x);
    const double ratio = std::abs(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]) / abs_sum(v);
    CHECK(ratio < 1e-12);
  }
}

TEST_CASE("rho bounds on random smooth data") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  for (int trial = 0; trial < 4; ++trial) {
    const SpinData sd{poly({{0, 1.0}, {1, cplx(u(rng), u(rng))}, {2, cplx(u(rng), u(rng))}}),
                      OneForm(poly({{0, cplx(1.5, u(rng))}, {1, cplx(u(rng), u(rng))}}))};
    const DeformArc arc{{u(rng), u(rng)}, {1.0 + u(rng), 0.5 + u(rng)}};
    for (double t : {1.0, 10.0, 100.0}) {
      const ArcSpin a(sd, arc, t);
      for (int k = 0; k <= 1000; ++k) {
        const double r = std::abs(a.rho(k / 1000.0));
        CHECK(r >= a.A0 * (1 - 1e-12));
        CHECK(r <= (a.A1 * t + a.A2) * (1 + 1e-12));
      }
    }
  }
}

TEST_CASE("zeros of phi3 on the arc are refused") {
  const SpinData sd{HoloFunction::constant(1.0), OneForm(poly({{0, -0.25}, {1, 1.0}}))};
  try {
    ArcSpin a(sd, unit_arc, 2.0);
    FAIL("expected ZeroOnArc");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroOnArc);
  }
}

TEST_CASE("shooting") {
  // rho = 1 at t = 1 when g f3 is identically one along the arc.
  const SpinData flat{HoloFunction::constant(1.0), OneForm(HoloFunction::constant(1.0))};
  const ShootResult noop = shoot_t(flat, unit_arc, 0.0);
  CHECK(noop.t0 == 1.0);
  CHECK(std::abs(noop.residual) < 1e-9);

  const DeformArc arc{{0.2, 0.3}, {1.0, 0.8}};
  const SpinData e = enneper();
  const auto residual = [&](double t, double shift) {
    const ArcSpin a(e, arc, t);
    return a.re_int_psi1_hat() - (a.re_int_psi1() - shift);
  };
  // On the plateau g_hat f3 = t, so the residual falls like -t/6; a shift of 50
  // is bracketed by t = -1000, 1000 (not by +-100).
  CHECK(residual(-1000.0, 50.0) * residual(1000.0, 50.0) < 0.0);
  CHECK((residual(1000.0, 0.0) - residual(-1000.0, 0.0)) / 2000.0 == doctest::Approx(-1.0 / 6.0).epsilon(1e-2));
  for (double shift : {50.0, 0.0, -3.0}) {
    const ShootResult s = shoot_t(e, arc, shift);
    CHECK(std::abs(residual(s.t0, shift)) <= 1e-9 * std::abs(shift) + 1e-9);
    CHECK(s.bracket_lo <= s.t0);
    CHECK(s.t0 <= s.bracket_hi);
  }
}

TEST_CASE("choose_lambda") {
  const Wedge w(0.0, -0.3);
  const Vec3 on{1.0, 0.0, std::tan(0.3) * 1.0};  // x3 - tan(0.3) x1 = 0
  CHECK(choose_lambda({{0.0, 0.0, 5.0}}, w, 1.0) == 0.0);
  const double lam = choose_lambda({on}, w, 1.0);
  // exact distance-1 shift (mpmath) with the 1% headroom
  CHECK(lam == doctest::Approx(1.01 * 3.38386336182412258).epsilon(1e-13));
  CHECK(dist_to_wedge(w, on - Vec3{lam, 0.0, 0.0}) > 1.0);
  double prev = 0.0;
  for (double m : {0.5, 1.0, 2.0, 4.0}) {
    const double l = choose_lambda({on, {0.0, 1.0, -0.5}}, w, m);
    CHECK(l > prev);
    if (prev > 0.0) CHECK(l >= 2.0 * prev - 1.01 * 0.5 / std::tan(0.3) - 1e-12);
    prev = l;
  }
  try {
    choose_lambda({on}, Wedge(0.0, 0.3), 1.0);
    FAIL("expected WrongSign");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongSign);
  }
}

TEST_CASE("rotations of triples and immersions") {
  const CompactSet disk = CompactSet::disk(0.0, 1.5);
  Immersion im;
  im.triple = from_spin_data(enneper(), disk);
  im.domain = disk;
  im.base_value = {0.1, 0.2, 3.0};
  const NullTriple same = rotate_triple(im.triple, {0.0, 0.0});
  CHECK(abs_sum(same.eval({0.3, 0.1}) - im.triple.eval({0.3, 0.1})) == 0.0);
  const WedgeRotation r{kPi / 7, 2.0};
  const Immersion rot = rotate_immersion(im, r);
  CHECK(check_triple(rot.triple, disk).max_nullity_ratio < 1e-12);
  for (cplx z : {cplx(0.5, 0.5), cplx(-1.0, 0.2), cplx(0.0, -1.2)})
    CHECK(norm(immerse(rot, z) - rotate_point(r, immerse(im, z))) < 1e-10);
  const Immersion back = rotate_immersion(rot, r.inverse());
  CHECK(norm(immerse(back, {0.4, 0.4}) - immerse(im, {0.4, 0.4})) < 1e-12);
}
