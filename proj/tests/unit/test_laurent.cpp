#include <doctest.h>

#include "weierforge/laurent.hpp"

using namespace weierforge;

TEST_CASE("trimmed storage makes equality structural") {
  Laurent a(-2, {0.0, 1.0, 2.0, 0.0});
  CHECK(a.lowest() == -1);
  CHECK(a.highest() == 0);
  CHECK(a == Laurent(std::map<int, cplx>{{-1, 1.0}, {0, 2.0}}));
  CHECK(Laurent(0, {0.0, 0.0}).is_zero());
}

TEST_CASE("evaluation and derivative") {
  const Laurent p(-1, {2.0, 0.0, 3.0});  // 2/w + 3w
  const cplx w{0.5, -0.25};
  CHECK(std::abs(p.eval(w) - (2.0 / w + 3.0 * w)) < 1e-14);
  cplx v, d;
  p.eval_with_derivative(w, v, d);
  CHECK(std::abs(d - (-2.0 / (w * w) + 3.0)) < 1e-13);
  CHECK(p.derivative() == Laurent(std::map<int, cplx>{{-2, -2.0}, {0, 3.0}}));
  CHECK(p.pole_order() == 1);
}

TEST_CASE("products and affine composition") {
  const Laurent a(0, {1.0, 1.0});  // 1 + w
  const Laurent sq = a * a;
  CHECK(sq == Laurent(0, {1.0, 2.0, 1.0}));
  // (1 + w)^2 at w = 2 + 3u  ->  9 + 18u + 9u^2
  CHECK(sq.compose_affine(2.0, 3.0) == Laurent(0, {9.0, 18.0, 9.0}));
  CHECK((a - a).is_zero());
  CHECK(a.without_constant() == Laurent::monomial(1));
}
