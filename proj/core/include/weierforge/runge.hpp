#pragma once

#include <functional>
#include <string>
#include <vector>

#include "weierforge/compact_set.hpp"
#include "weierforge/divisor.hpp"
#include "weierforge/holo.hpp"
#include "weierforge/quadrature.hpp"

namespace weierforge {

struct RungeOptions {
  int max_degree = 64;
  // When >= 0, use exactly this degree (the error is still measured and
  // checked against eps).
  int fixed_degree = -1;
  int cauchy_points = 1024;
  // fit_on_set: return the best fit found instead of DegreeBudgetExceeded.
  bool best_effort = false;
  QuadratureOptions quad{};
};

struct Approximation {
  HoloFunction f;
  int degree = 0;
  double sup_error = 0.0;     // measured on the boundary samples of K
  double hermite_size = 0.0;  // sup of the divisor correction on the same samples
  std::string method;         // "identity", "taylor" or "least-squares"
};

// Polynomial p with sup_K |f - p| < eps and f - p vanishing to the orders of D.
Approximation approx_with_divisor(const HoloFunction& f, const CompactSet& K, const Divisor& D, double eps,
                                  const RungeOptions& opt = {});

struct NonvanishingApproximation {
  HoloFunction f;        // B * exp(h)
  Laurent B;             // divisor factor in K's frame
  Laurent h;             // exponent in K's frame
  Divisor divisor;       // zeros (positive) and poles (negative) of f on K
  int hole_winding = 0;  // integer period correction on an annulus
  int degree = 0;
  double sup_error = 0.0;
};

NonvanishingApproximation approx_nonvanishing(const HoloFunction& f, const CompactSet& K, double eps,
                                              const RungeOptions& opt = {});

// Fit of sampled data on K (boundary points plus any extra points) by a
// polynomial in K's frame, or a Laurent polynomial -N..N on an annulus.
// Grows the degree until the sampled error is below eps.
struct SampledFit {
  Laurent coeffs;
  Frame frame;
  int degree = 0;
  double sup_error = 0.0;
};
SampledFit fit_on_set(const std::function<cplx(cplx)>& values, const CompactSet& K, double eps,
                      const RungeOptions& opt = {}, const std::vector<cplx>& extra_points = {});

// Zeros of f inside the closed loop (counterclockwise), found from the
// argument-principle moments and polished by Newton. Declared poles of f
// inside the loop are accounted for.
Divisor zeros_inside(const HoloFunction& f, const Path& loop, const QuadratureOptions& q = {});

// Number of zeros minus poles of f inside a counterclockwise loop.
int argument_principle(const HoloFunction& f, const Path& loop);

}  // namespace weierforge
