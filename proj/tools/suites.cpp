#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "weierforge/deform.hpp"
#include "weierforge/periods.hpp"
#include "weierforge/quadrature.hpp"
#include "weierforge/wedge.hpp"

namespace weierforge::suites {

namespace {

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

Immersion make_immersion(const SpinData& sd, const CompactSet& K, cplx base) {
  Immersion im;
  im.triple = from_spin_data(sd, K);
  im.base_point = base;
  im.domain = K;
  im.quad = QuadratureOptions::from_env();
  return im;
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(lines.begin(), lines.end(), [](const Line& l) { return l.pass; });
}

SpinData enneper(int order) {
  return {HoloFunction::laurent_about(0.0, {{order, 1.0}}),
          OneForm(HoloFunction::laurent_about(0.0, {{order, 1.0}}))};
}

Vec3 enneper_closed(cplx z) {
  const cplx z3 = z * z * z;
  return {(0.5 * z - z3 / 6.0).real(), (kI * (0.5 * z + z3 / 6.0)).real(), (0.5 * z * z).real()};
}

double loglog_slope(const std::vector<double>& h, const std::vector<double>& v) {
  const std::size_t n = h.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(h[i]), y = std::log(v[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

HarmonicityFit harmonicity_fit(const std::vector<double>& hs) {
  const auto t0 = std::chrono::steady_clock::now();
  HarmonicityFit out;
  out.h = hs;
  const CompactSet K = CompactSet::rectangle({0.0, 1.4, 0.0, 1.4});
  const Immersion im = make_immersion(enneper(3), K, {0.7, 0.7});
  for (double h : hs) {
    const int m = static_cast<int>(std::lround(1.0 / h));
    const std::vector<double> xs = linspace(0.2, 1.2, m + 1);
    const GridSamples g = sample_grid(im, xs, xs);
    std::array<double, 3> worst{};
    for (std::size_t j = 1; j + 1 < g.ny(); ++j)
      for (std::size_t i = 1; i + 1 < g.nx(); ++i)
        for (int k = 0; k < 3; ++k) {
          const double lap = (g.at(i + 1, j)[k] + g.at(i - 1, j)[k] + g.at(i, j + 1)[k] + g.at(i, j - 1)[k] -
                              4.0 * g.at(i, j)[k]) /
                             (h * h);
          worst[k] = std::max(worst[k], std::abs(lap));
        }
    out.max_lap.push_back(worst);
  }
  for (int k = 0; k < 3; ++k) {
    std::vector<double> v;
    for (const auto& w : out.max_lap) v.push_back(w[k]);
    out.slope[k] = loglog_slope(hs, v);
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

SuiteResult residues() {
  SuiteResult r{"residues", {}};
  const Path c = Path::circle(0.0, 1.0);
  const QuadratureOptions q = QuadratureOptions::from_env();
  double worst = 0.0;
  for (int k = -5; k <= 5; ++k) {
    const cplx v = integrate(OneForm(HoloFunction::laurent_about(0.0, {{k, 1.0}})), c, q);
    const cplx expect = k == -1 ? 2.0 * kPi * kI : cplx(0.0);
    worst = std::max(worst, std::abs(v - expect));
  }
  r.lines.push_back({"z^k residues, k in [-5,5]", worst <= 1e-10, fmt("max error %.3g", worst)});
  const cplx twice = integrate(OneForm(HoloFunction::laurent_about(0.0, {{-1, 1.0}})), Path::circle(0.0, 1.0, 256, 2), q);
  const double e2 = std::abs(twice - 4.0 * kPi * kI);
  r.lines.push_back({"dz/z over a doubled loop = 4 pi i", e2 <= 1e-10, fmt("error %.3g", e2)});
  const cplx off = integrate(OneForm(HoloFunction::laurent_about(3.0, {{-1, 1.0}})), c, q);
  r.lines.push_back({"pole outside the loop", std::abs(off) <= 1e-10, fmt("|integral| %.3g", std::abs(off))});
  return r;
}

SuiteResult nullity() {
  SuiteResult r{"nullity", {}};
  const CompactSet disk = CompactSet::disk(0.0, 1.5);
  for (int order : {1, 2, 3}) {
    const TripleCheck tc = check_triple(from_spin_data(enneper(order), disk), disk);
    r.lines.push_back({"Enneper order " + std::to_string(order) + " null and regular",
                       tc.max_nullity_ratio <= 1e-12 && tc.min_metric > 0.0,
                       fmt("nullity %.3g, min metric %.3g", tc.max_nullity_ratio, tc.min_metric)});
  }
  const PeriodProblem cat = catenoid_problem({0.0, 0.0, 2.0 * kPi}, 0);
  const NullTriple t = from_spin_data(cat.sd, cat.domain);
  const TripleCheck tc = check_triple(t, cat.domain);
  r.lines.push_back({"catenoid null and regular", tc.max_nullity_ratio <= 1e-12 && tc.min_metric > 0.0,
                     fmt("nullity %.3g, min metric %.3g", tc.max_nullity_ratio, tc.min_metric)});
  const QuadratureOptions q = QuadratureOptions::from_env();
  const Vec3 fl = flux(t, cat.basis.front(), q);
  const double fe = norm(fl - Vec3{0.0, 0.0, 2.0 * kPi});
  r.lines.push_back({"catenoid flux (0,0,2pi)", fe <= 1e-8, fmt("error %.3g", fe)});
  const double rp = norm(real_period(t, cat.basis.front(), q));
  r.lines.push_back({"catenoid real periods vanish", rp <= 1e-10, fmt("|period| %.3g", rp)});

  const CompactSet sq = CompactSet::rectangle({-1.0, 1.0, -1.0, 1.0});
  const Immersion im = make_immersion(enneper(1), sq, 0.0);
  double worst = 0.0;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int s = 0; s < 25; ++s) {
    const cplx z{u(rng), u(rng)};
    worst = std::max(worst, norm(immerse(im, z) - enneper_closed(z)));
  }
  r.lines.push_back({"Enneper closed form at 25 points", worst <= 1e-9, fmt("max error %.3g", worst)});
  return r;
}

SuiteResult harmonicity(const std::vector<double>& hs) {
  SuiteResult r{"harmonicity", {}};
  if (hs.size() < 2) {
    r.lines.push_back({"at least two spacings", false, "need --h with two or more values"});
    return r;
  }
  const HarmonicityFit f = harmonicity_fit(hs);
  for (int k = 0; k < 3; ++k)
    r.lines.push_back({"x" + std::to_string(k + 1) + " Laplacian slope >= 1.9", f.slope[k] >= 1.9,
                       fmt("slope %.4f, finest max %.3g", f.slope[k], f.max_lap.back()[k])});
  return r;
}

SuiteResult rotation() {
  SuiteResult r{"rotation", {}};
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  const std::array<std::array<double, 2>, 3> cases{{{1.0, 0.3}, {2.0, 0.5}, {5.0, 0.7}}};
  for (const auto& [delta, theta] : cases) {
    const Wedge w(delta, theta);
    const WedgeRotation L{theta, delta};
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
      const double x1 = u(rng), x2 = u(rng);
      const Vec3 p{x1, x2, delta - std::tan(theta) * x1};
      const Vec3 q = rotate_point(L, p);
      worst = std::max({worst, std::abs(q[2] - delta), std::abs(q[1] - x2)});
    }
    r.lines.push_back({fmt("boundary of wedge (%g, %g) onto x3 = delta", delta, theta), worst <= 1e-12,
                       fmt("max deviation %.3g", worst)});
  }
  // Distance bookkeeping: rotation is an isometry that carries the wedge onto the flat one.
  const Wedge w(2.0, 0.5), flat(2.0, 0.0);
  const WedgeRotation L{0.5, 2.0};
  double worst = 0.0;
  for (int s = 0; s < 100; ++s) {
    const Vec3 p{u(rng), u(rng), u(rng)};
    worst = std::max(worst, std::abs(signed_dist(w, p) - signed_dist(flat, rotate_point(L, p))));
  }
  r.lines.push_back({"signed distance preserved", worst <= 1e-12, fmt("max deviation %.3g", worst)});
  return r;
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"residues", "nullity", "harmonicity", "rotation"};
  return n;
}

bool run_named(const std::string& name, const std::vector<double>& hs, std::vector<SuiteResult>& out) {
  if (!name.empty() && std::find(names().begin(), names().end(), name) == names().end()) return false;
  const auto want = [&](const char* s) { return name.empty() || name == s; };
  if (want("residues")) out.push_back(residues());
  if (want("nullity")) out.push_back(nullity());
  if (want("harmonicity")) out.push_back(harmonicity(hs));
  if (want("rotation")) out.push_back(rotation());
  return true;
}

}  // namespace weierforge::suites
