#include <doctest.h>

#include "weierforge/compact_set.hpp"
#include "weierforge/path.hpp"

using namespace weierforge;

TEST_CASE("polylines and circles") {
  const Path s = Path::polyline({0.0, 1.0, {1.0, 1.0}});
  CHECK(s.segment_count() == 2);
  CHECK(s.length() == doctest::Approx(2.0));
  CHECK(std::abs(s.at(0.75) - cplx(1.0, 0.5)) < 1e-15);
  CHECK(std::abs(s.reversed().start() - cplx(1.0, 1.0)) < 1e-15);
  const Path c = Path::circle(0.0, 1.0, 256, 2);
  CHECK(c.closed());
  CHECK(c.segment_count() == 512);
  CHECK(std::abs(c.start() - c.end()) < 1e-15);
  CHECK(s.distance_to({0.5, 0.5}) == doctest::Approx(0.5));
}

TEST_CASE("compact sets") {
  const CompactSet r = CompactSet::rectangle({-2.0, 2.0, 0.0, 2.0});
  CHECK(r.contains({0.0, 1.0}));
  CHECK(!r.contains({0.0, 2.5}));
  CHECK(r.in_interior({0.0, 1.0}, 0.5));
  CHECK(!r.in_interior({0.0, 1.9}, 0.5));
  const CompactSet a = CompactSet::annulus(0.0, 0.5, 2.0);
  CHECK(!a.contains(0.1));
  CHECK(a.contains(1.0));
  CHECK(a.boundary_loops().size() == 2);
  const CompactSet ra = CompactSet::rectangles_with_arcs({{0.0, 1.0, 0.0, 1.0}, {2.0, 3.0, 0.0, 1.0}},
                                                         {Path::segment({1.0, 0.5}, {2.0, 0.5})});
  CHECK(ra.admissible());
  CHECK(ra.contains({1.5, 0.5}));
  CHECK(!ra.contains({1.5, 0.7}));
}
