#include <doctest.h>

#include "weierforge/divisor.hpp"

using namespace weierforge;

TEST_CASE("merging, ordering and degree") {
  const Divisor d({{0.0, 2}, {1.0, 1}, {0.0, -1}, {2.0, 0}});
  CHECK(d.entries().size() == 2);
  CHECK(d.multiplicity_at(0.0) == 1);
  CHECK(d.degree() == 2);
  CHECK(d.is_integral());
  CHECK(Divisor().is_integral());
  CHECK(!Divisor({{0.0, -1}}).is_integral());
  CHECK(Divisor({{0.0, 2}}) >= Divisor({{0.0, 1}}));
  CHECK(!(Divisor({{0.0, 1}}) >= Divisor({{0.0, 2}})));
  CHECK((d - d).empty());
}

TEST_CASE("monic polynomial of an integral divisor") {
  const Laurent p = Divisor({{1.0, 1}, {-1.0, 1}}).monic_polynomial();  // z^2 - 1
  CHECK(p == Laurent(0, {-1.0, 0.0, 1.0}));
}
