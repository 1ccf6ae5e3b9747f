#pragma once

#include <functional>
#include <string>
#include <vector>

#include "weierforge/weierstrass.hpp"

namespace weierforge::suites {

struct Line {
  std::string what;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<Line> lines;
  bool pass() const;
};

struct HarmonicityFit {
  std::vector<double> h;
  std::vector<std::array<double, 3>> max_lap;  // per h, per coordinate
  std::array<double, 3> slope{};
  double seconds = 0.0;
};

// Max |5-point Laplacian| of each coordinate over the interior of an h-grid on
// [0.2, 1.2]^2, for the order-3 Enneper data g = z^3, phi3 = z^3 dz.
HarmonicityFit harmonicity_fit(const std::vector<double>& hs);
double loglog_slope(const std::vector<double>& h, const std::vector<double>& v);

SuiteResult residues();
SuiteResult nullity();
SuiteResult harmonicity(const std::vector<double>& hs);
SuiteResult rotation();

const std::vector<std::string>& names();
// Empty name runs every suite; unknown names return false.
bool run_named(const std::string& name, const std::vector<double>& hs, std::vector<SuiteResult>& out);

// Closed-form Enneper immersion Re(z/2 - z^3/6, i(z/2 + z^3/6), z^2/2).
Vec3 enneper_closed(cplx z);
SpinData enneper(int order = 1);

}  // namespace weierforge::suites
