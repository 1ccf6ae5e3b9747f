#include <doctest.h>

#include <algorithm>

#include "weierforge/error.hpp"
#include "weierforge/runge.hpp"

using namespace weierforge;

namespace {
const CompactSet disk = CompactSet::disk(0.0, 1.0);
HoloFunction inv_z_minus_2() { return HoloFunction::laurent_about(2.0, {{-1, 1.0}}); }

double sup_on_circle(const HoloFunction& a, const HoloFunction& b, int n = 4096) {
  double m = 0.0;
  for (int k = 0; k < n; ++k) {
    const cplx z = std::polar(1.0, 2.0 * kPi * k / n);
    m = std::max(m, std::abs(a.eval(z) - b.eval(z)));
  }
  return m;
}
}  // namespace

TEST_CASE("Taylor truncation of 1/(z-2)") {
  RungeOptions o;
  o.fixed_degree = 21;
  const Approximation a = approx_with_divisor(inv_z_minus_2(), disk, {}, 1e-6, o);
  CHECK(a.degree == 21);
  CHECK(a.f.is_polynomial());
  // Tail sum_{k>=22} 2^{-k-1} = 2^-22, attained at z = 1 (mpmath oracle).
  const double tail = 2.384185791015625e-07;
  CHECK(a.sup_error <= 1e-6);
  CHECK(sup_on_circle(a.f, inv_z_minus_2()) == doctest::Approx(tail).epsilon(1e-6));

  // Automatic degree: the smallest with tail < 1e-6 is 19 (2^-20).
  const Approximation b = approx_with_divisor(inv_z_minus_2(), disk, {}, 1e-6);
  CHECK(b.degree == 19);
  CHECK(b.sup_error == doctest::Approx(9.5367431640625e-07).epsilon(1e-6));
}

TEST_CASE("polynomials are returned unchanged") {
  const HoloFunction p = HoloFunction::laurent_about(0.0, {{0, 1.0}, {2, 3.0}});
  const Approximation a = approx_with_divisor(p, disk, Divisor({{0.5, 1}}), 1e-12);
  CHECK(a.method == "identity");
  CHECK(sup_on_circle(a.f, p) == 0.0);
}

TEST_CASE("divisor constraints are met by the Hermite correction") {
  const Approximation a = approx_with_divisor(inv_z_minus_2(), disk, Divisor({{0.0, 2}}), 1e-5);
  cplx v, d, fv, fd;
  a.f.eval_with_derivative(0.0, v, d);
  inv_z_minus_2().eval_with_derivative(0.0, fv, fd);
  CHECK(std::abs(v - fv) < 1e-14);
  CHECK(std::abs(d - fd) < 1e-14);
  CHECK(a.sup_error < 1e-5);
  CHECK(sup_on_circle(a.f, inv_z_minus_2()) < 1e-5);
}

TEST_CASE("bad divisors and budgets") {
  CHECK_THROWS_AS(approx_with_divisor(inv_z_minus_2(), disk, Divisor({{3.0, 1}}), 1e-6), Error);
  RungeOptions o;
  o.max_degree = 4;
  try {
    approx_with_divisor(inv_z_minus_2(), disk, {}, 1e-12, o);
    FAIL("expected DegreeBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeBudgetExceeded);
  }
}

TEST_CASE("nonvanishing approximation") {
  const HoloFunction ez = HoloFunction::exp_of(Laurent::monomial(1));
  const NonvanishingApproximation a = approx_nonvanishing(ez, disk, 1e-8);
  CHECK(a.sup_error < 1e-8);
  CHECK(sup_on_circle(a.f, ez) < 1e-8);
  CHECK(a.divisor.empty());

  const NonvanishingApproximation z = approx_nonvanishing(HoloFunction::identity(), disk, 1e-3);
  CHECK(z.divisor.multiplicity_at(0.0, 1e-12) == 1);
  CHECK(sup_on_circle(z.f, HoloFunction::identity()) < 1e-14);

  const HoloFunction f = HoloFunction::identity() * HoloFunction::exp_of(Laurent::monomial(-1), Frame{3.0, 1.0});
  const NonvanishingApproximation b = approx_nonvanishing(f, disk, 1e-6);
  CHECK(b.divisor.entries().size() == 1);
  CHECK(b.divisor.multiplicity_at(0.0, 1e-12) == 1);
  CHECK(b.h.highest() >= 0);
  CHECK(!b.h.has_negative_powers());
  CHECK(sup_on_circle(b.f, f) < 1e-6);
  CHECK(argument_principle(b.f, Path::circle(0.0, 1.0)) == 1);
}

TEST_CASE("annulus winding is carried by the divisor factor") {
  const CompactSet ann = CompactSet::annulus(0.0, 0.5, 2.0);
  const HoloFunction f = HoloFunction::laurent_about(0.0, {{-1, 1.0}, {0, 0.1}});
  const NonvanishingApproximation a = approx_nonvanishing(f, ann, 1e-8);
  CHECK(a.hole_winding == -1);
  for (cplx z : {cplx(0.6, 0.0), cplx(0.0, 1.9), cplx(-1.0, -1.0)}) CHECK(std::abs(a.f.eval(z) - f.eval(z)) < 1e-8);
}

TEST_CASE("zeros from argument-principle moments") {
  const HoloFunction p = HoloFunction::laurent_about(0.0, {{0, -0.06}, {1, -0.1}, {2, 1.0}});  // (z-0.3)(z+0.2)
  const Divisor d = zeros_inside(p, Path::circle(0.0, 1.0));
  CHECK(d.multiplicity_at(0.3, 1e-12) == 1);
  CHECK(d.multiplicity_at(-0.2, 1e-12) == 1);
  CHECK(argument_principle(p, Path::circle(0.0, 1.0)) == 2);
}

TEST_CASE("fit on a rectangle-with-arc set") {
  const CompactSet K =
      CompactSet::rectangles_with_arcs({{-2.0, 2.0, 0.5, 2.0}, {-2.0, 2.0, 0.0, 0.3}}, {Path::segment({1.0, 0.3}, {1.0, 0.5})});
  const auto f = [](cplx z) { return std::exp(0.3 * z); };
  const SampledFit s = fit_on_set(f, K, 1e-9);
  CHECK(s.sup_error < 1e-9);
  CHECK(std::abs(s.coeffs.eval(s.frame.to_local({0.0, 1.0})) - f({0.0, 1.0})) < 1e-8);
}
