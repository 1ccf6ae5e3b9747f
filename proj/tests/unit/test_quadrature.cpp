#include <doctest.h>

#include "weierforge/error.hpp"
#include "weierforge/quadrature.hpp"

using namespace weierforge;

namespace {
OneForm z_pow(int k, double a = 1.0) { return OneForm(HoloFunction::laurent_about(0.0, {{k, a}})); }
const cplx two_pi_i{0.0, 2.0 * kPi};
}  // namespace

TEST_CASE("residue oracle over the unit circle") {
  const Path c = Path::circle(0.0, 1.0);
  CHECK(std::abs(integrate(z_pow(0), c)) < 1e-12);
  CHECK(std::abs(integrate(z_pow(-1), c) - two_pi_i) < 1e-10);
  for (int k = -5; k <= 5; ++k) {
    const cplx expect = k == -1 ? two_pi_i : 0.0;
    CHECK(std::abs(integrate(z_pow(k), c) - expect) < 1e-10);
  }
  CHECK(std::abs(integrate(z_pow(-1), Path::circle(0.0, 1.0, 256, 2)) - 2.0 * two_pi_i) < 1e-10);
}

TEST_CASE("segments and primitives") {
  CHECK(std::abs(integrate(z_pow(1), Path::segment(0.0, 1.0)) - 0.5) < 1e-12);
  const cplx t{3.0, 4.0};
  CHECK(std::abs(primitive(z_pow(0), 0.0, t, Path::segment(0.0, t)) - t) < 1e-12);
  CHECK(std::abs(primitive(z_pow(1, 2.0), 0.0, kI, Path::segment(0.0, kI)) + 1.0) < 1e-12);
  // dz/z from 1 to -1: upper minus lower half circle is 2 pi i (mpmath oracle).
  const Path up = Path::arc(0.0, 1.0, 0.0, kPi), down = Path::arc(0.0, 1.0, 0.0, -kPi);
  const cplx d = primitive(z_pow(-1), 1.0, -1.0, up) - primitive(z_pow(-1), 1.0, -1.0, down);
  CHECK(std::abs(d - two_pi_i) < 1e-10);
}

TEST_CASE("refuses paths through poles") {
  try {
    integrate(z_pow(-1), Path::segment(-1.0, 1.0));
    FAIL("expected PoleTooClose");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleTooClose);
  }
}

TEST_CASE("continuous logarithms") {
  const Path c = Path::circle(0.0, 1.0);
  const LogTrace e = log_along(HoloFunction::constant(std::exp(1.0)), c);
  CHECK(std::abs(e.values.front() - 1.0) < 1e-15);
  CHECK(std::abs(e.increment()) < 1e-15);
  const LogTrace z = log_along(HoloFunction::identity(), c);
  CHECK(std::abs(z.increment() - two_pi_i) < 1e-12);
  CHECK(z.winding() == 1);
  CHECK(log_along(HoloFunction::laurent_about(0.0, {{0, -2.0}, {1, 1.0}}), c).winding() == 0);
}

TEST_CASE("tolerance from the environment") {
  setenv("WEIERFORGE_QUAD_TOL", "1e-6", 1);
  CHECK(QuadratureOptions::from_env().rel_tol == doctest::Approx(1e-6));
  unsetenv("WEIERFORGE_QUAD_TOL");
  CHECK(QuadratureOptions::from_env().rel_tol == doctest::Approx(1e-11));
}
