#include <doctest.h>

#include "weierforge/builder.hpp"
#include "weierforge/error.hpp"
#include "weierforge/report.hpp"

#include <json.hpp>

using namespace weierforge;

namespace {
StageConfig small() {
  StageConfig c;
  c.nx = 48;
  c.ny = 48;
  return c;
}
}  // namespace

TEST_CASE("grid carries the certificate rows") {
  const StageConfig c = small();
  const auto ys = grid_ys(c);
  for (int j = 1; j <= c.max_stage + 1; ++j)
    CHECK(std::find(ys.begin(), ys.end(), 1.0 / (j + 1)) != ys.end());
  CHECK(grid_xs(c).front() == -2.0);
  CHECK(grid_xs(c).back() == 2.0);
  StageConfig bad = c;
  bad.epsilon = -1.0;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("certificates on synthetic samples") {
  // n = 2: rows at y = 1/3 and 1/2, plus the top of D.
  std::vector<SamplePoint> prev, cur;
  for (double y : {1.0 / 3.0, 0.4, 0.5, 1.0})
    for (double x : {-1.0, 0.0, 1.0}) {
      const Vec3 p{x, 0.0, 3.0};
      prev.push_back({{x, y}, p});
      cur.push_back({{x, y}, p + Vec3{0.1, 0.0, 0.0}});
    }
  double sup = 0.0;
  const Certificates c = certify(2, 0.5, cur, &prev, &sup);
  CHECK(sup == doctest::Approx(0.1));
  CHECK(*c.i == doctest::Approx(0.25 - 0.1));
  // min over row 1/3 of x3 + tan(1/2) x1 - 2, attained at x1 = -0.9
  CHECK(*c.ii == doctest::Approx(3.0 - 0.9 * std::tan(0.5) - 2.0));
  CHECK(*c.iv == doctest::Approx(3.0 - 0.75));
  CHECK(c.first_violation().empty());
  const auto ledger = properness_ledger(2, 0.5, cur);
  REQUIRE(ledger.size() == 1);
  CHECK(ledger[0].points == 6);
  CHECK(ledger[0].min_value == doctest::Approx(3.0 + std::tan(1.0) * 0.1));
  CHECK(ledger[0].margin() == doctest::Approx(3.0 + std::tan(1.0) * 0.1));
}

TEST_CASE("stage one") {
  const StageConfig cfg = small();
  const StageState s = init_stage(cfg);
  CHECK(s.n == 1);
  REQUIRE(s.cert.ii.has_value());
  CHECK(*s.cert.ii > 0.0);
  CHECK((s.cert.iv_vacuous || *s.cert.iv > 0.0));
  double lo = 1e300;
  for (const auto& p : to_points(s.samples))
    if (p.z.imag() >= 0.5) lo = std::min(lo, p.x[2] + std::tan(1.0) * p.x[0]);
  CHECK(lo > 1.0);
  CHECK(lo == doctest::Approx(1.0 + cfg.lift).epsilon(1e-6));
  // non-flat: the Gauss map c z is not constant
  const CVec3 a = s.immersion.triple.eval({0.1, 1.0}), b = s.immersion.triple.eval({1.0, 1.5});
  CHECK(std::abs(a[2] / (a[0] - kI * a[1]) - b[2] / (b[0] - kI * b[1])) > 1e-3);
  const TripleCheck tc = check_triple(s.immersion.triple, s.immersion.domain);
  CHECK(tc.max_nullity_ratio < 1e-12);
  CHECK(tc.min_metric > 0.0);

  const RunResult r = run([] {
    StageConfig c = small();
    c.max_stage = 1;
    return c;
  }());
  CHECK(r.ok);
  CHECK(r.stages.size() == 1);
}

TEST_CASE("rotation bookkeeping") {
  const StageState s = init_stage(small());
  const WedgeRotation L{1.0, 1.0};  // n = 2
  for (const auto& p : to_points(s.samples))
    if (std::abs(p.z.imag() - 0.5) < 1e-12) CHECK(rotate_point(L, p.x)[2] > 1.0);
  const Immersion back = rotate_immersion(rotate_immersion(s.immersion, L), L.inverse());
  for (cplx z : {cplx(-1.5, 0.2), cplx(0.0, 1.0), cplx(1.9, 1.9)})
    CHECK(norm(immerse(back, z) - immerse(s.immersion, z)) < 1e-10);
}

TEST_CASE("stage two is either certified or fails diagnosably") {
  const StageConfig cfg = small();
  const StageState s1 = init_stage(cfg);
  try {
    const StageState s2 = advance_stage(s1, cfg);
    CHECK(s2.n == 2);
    CHECK(s2.cert.first_violation().empty());
    CHECK(*s2.cert.i > 0.0);
  } catch (const StageFailure& f) {
    const StageState& a = f.attempt();
    CHECK(!f.certificate().empty());
    CHECK(f.margin() <= 0.0);
    CHECK(a.n == 2);
    CHECK(a.mu > 1.0 / 3.0);
    CHECK(a.mu <= 0.5);
    CHECK(a.lambda >= 0.0);
    CHECK(a.retries >= 1);
    // the failing certificate is the one reported
    CHECK(a.cert.first_violation() == f.certificate());
    MESSAGE("stage 2 failed certificate " << f.certificate() << " margin " << f.margin());
  }
}

TEST_CASE("report JSON") {
  StageConfig cfg = small();
  cfg.max_stage = 1;
  const RunResult r = run(cfg);
  const auto j = nlohmann::json::parse(build_report_json(cfg, r));
  CHECK(j["status"] == "ok");
  REQUIRE(j["stages"].size() == 1);
  CHECK(j["stages"][0]["stage"] == 1);
  CHECK(j["stages"][0]["cert_margins"]["i"].is_null());
  CHECK(j["stages"][0]["cert_margins"]["ii"].get<double>() == doctest::Approx(*r.stages[0].cert.ii));
}
