#pragma once

#include <string>
#include <vector>

#include "weierforge/weierstrass.hpp"

namespace weierforge {

struct PeriodProblem {
  SpinData sd;
  CompactSet domain = CompactSet::annulus(0.0, 0.5, 2.0);
  std::vector<Path> basis;
  std::vector<Vec3> target_flux;
  int param_degree = 4;
  QuadratureOptions quad{};

  // Chart for the correction exponents: centered at the hole, unit scale.
  Frame param_frame() const { return Frame{domain.center(), 1.0}; }
};

// The catenoid on 1/2 <= |z| <= 2 with the unit circle as homology basis.
PeriodProblem catenoid_problem(Vec3 target, int degree = 4);

// Per basis loop, the integrals of ((e^{h2-h1}-1) eta1, (e^{h2+h1}-1) eta2,
// (e^{h2}-1) phi3) with eta1 = phi3/g, eta2 = -g phi3.
std::vector<CVec3> period_map(const PeriodProblem& pp, const Laurent& h1, const Laurent& h2);

struct PeriodReport {
  bool converged = false;
  int iterations = 0;
  int rank = 0;
  int unknowns = 0;
  int equations = 0;
  std::vector<double> singular_values;   // Jacobian at (0, 0)
  std::vector<double> residual_history;  // max-norm of the residual per iterate
  std::vector<Vec3> real_periods;        // of the corrected triple
  std::vector<Vec3> flux;
  double max_real_period = 0.0;
  double max_flux_error = 0.0;
  Laurent h1, h2;
};

struct PeriodSolution {
  SpinData sd;
  PeriodReport report;
};

// Newton on the Laurent coefficients of h1, h2 (degrees -d..d, real and
// imaginary parts as unknowns), minimum-norm steps, halving until the
// residual decreases, at most 50 iterations.
PeriodSolution solve_periods(const PeriodProblem& pp);

// Analytic Jacobian of the 6 nu real residuals with respect to the 4(2d+1)
// real unknowns, at the given exponents (exposed for testing).
std::vector<std::vector<double>> period_jacobian(const PeriodProblem& pp, const Laurent& h1, const Laurent& h2);

}  // namespace weierforge
