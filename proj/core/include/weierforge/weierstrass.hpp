#pragma once

#include <array>
#include <vector>

#include "weierforge/compact_set.hpp"
#include "weierforge/holo.hpp"
#include "weierforge/path.hpp"
#include "weierforge/quadrature.hpp"
#include "weierforge/types.hpp"

namespace weierforge {

struct SpinData {
  HoloFunction g;
  OneForm phi3;
};

struct TripleCheck {
  double max_nullity_ratio = 0.0;  // max |sum phi_k^2| / sum |phi_k|^2
  double min_metric = 0.0;         // min sum |phi_k|^2
  double max_metric = 0.0;
  int samples = 0;
};

// (phi1, phi2, phi3) with sum phi_k^2 = 0 and no common zeros.
struct NullTriple {
  std::array<OneForm, 3> phi;

  CVec3 eval(cplx z) const {
    return {phi[0].density.eval_unchecked(z), phi[1].density.eval_unchecked(z), phi[2].density.eval_unchecked(z)};
  }
  std::vector<cplx> singular_points() const;
};

// Samples a 64x64 grid over K (points of K clear of singularities).
TripleCheck check_triple(const NullTriple& t, const CompactSet& K, int n = 64);
// Throws NullityFailure / RegularityFailure when the invariants fail on K.
void validate_triple(const NullTriple& t, const CompactSet& K);

// phi1 = (1/g - g) phi3 / 2, phi2 = i (1/g + g) phi3 / 2. 1/g is exact for a
// single-term g; otherwise it is refit on K (RepresentationOverflow on failure).
NullTriple from_spin_data(const SpinData& sd, const CompactSet& K, bool validate = true);

struct Immersion {
  NullTriple triple;
  cplx base_point{};
  Vec3 base_value{};
  CompactSet domain;
  QuadratureOptions quad{};
  Vec3 base_conjugate{};  // value of X* at the base point
};

// Complex integral of the triple along p.
CVec3 integrate_triple(const NullTriple& t, const Path& p, const QuadratureOptions& q = {});

// X(z) = base_value + Re of the integral along p (p from base_point to z).
Vec3 immerse(const Immersion& im, cplx z, const Path& p);
// Along the straight segment from the base point (convex domains).
Vec3 immerse(const Immersion& im, cplx z);

Vec3 flux(const NullTriple& t, const Path& loop, const QuadratureOptions& q = {});
// Real periods over a closed loop (zero for a well-defined immersion).
Vec3 real_period(const NullTriple& t, const Path& loop, const QuadratureOptions& q = {});

// g = phi3 / (phi1 - i phi2); exact when phi1 - i phi2 is a single monomial
// term, otherwise refit on K with a round-trip residual check.
HoloFunction gauss_map(const NullTriple& t, const CompactSet& K);

double metric_density(const NullTriple& t, cplx z);

// X + i X* along p.
CVec3 conjugate_null_curve(const Immersion& im, cplx z, const Path& p);

// Immersion sampled on a tensor grid; index j * xs.size() + i for (xs[i], ys[j]).
struct GridSamples {
  std::vector<double> xs, ys;
  std::vector<cplx> z;
  std::vector<Vec3> x;
  std::size_t nx() const { return xs.size(); }
  std::size_t ny() const { return ys.size(); }
  const Vec3& at(std::size_t i, std::size_t j) const { return x[j * xs.size() + i]; }
};

// Cumulative integration along the first column, then along rows. The grid
// must lie in a convex part of the domain that also contains the base point.
GridSamples sample_grid(const Immersion& im, std::vector<double> xs, std::vector<double> ys);

std::vector<double> linspace(double a, double b, int n);

}  // namespace weierforge
