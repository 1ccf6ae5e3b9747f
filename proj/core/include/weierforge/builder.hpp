#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weierforge/deform.hpp"
#include "weierforge/error.hpp"
#include "weierforge/weierstrass.hpp"

namespace weierforge {

struct StageConfig {
  double epsilon = 0.5;
  int max_stage = 3;
  int nx = 128, ny = 128;
  double shoot_tol = -1.0;  // < 0: 1e-9 |lambda| + 1e-12
  double quad_tol = 1e-11;
  // Margin by which X_1(D_1) clears the first wedge: min over D_1 of
  // x3 + tan(1) x1 equals 1 + lift.
  double lift = 0.25;
  std::uint64_t seed = 0;
  int max_retries = 10;
  int max_degree = 64;
  double initial_fit_eps = 1e-3;

  void validate() const;
};

struct Certificates {
  std::optional<double> i, ii, iii, iv;  // margins; empty = not applicable / vacuous
  bool iv_vacuous = false;

  // First violated certificate ("i".."iv") or empty.
  std::string first_violation() const;
  std::optional<double> margin(const std::string& name) const;
};

struct LedgerEntry {
  int n = 0;
  double min_value = 0.0;  // min of (x3 + tan(1)|x1|) over C_n - C_{n-1}
  double bound = 0.0;      // n - 1 - 2 eps
  double escape_value = 0.0;  // min of x3 + tan(1/n)(|x1| + 1)
  int points = 0;
  double margin() const { return min_value - bound; }
};

struct StageState {
  int n = 1;
  Immersion immersion;
  GridSamples samples;
  Certificates cert;
  double mu = 0.0, lambda = 0.0, t0 = 0.0;
  double sup_diff_prev = 0.0;
  double min_metric = 0.0;
  double fit_error = 0.0;
  int fit_degree = 0;
  double shoot_residual = 0.0;
  double quad_tol = 0.0;  // relative tolerance the stage samples actually met
  int retries = 0;
  cplx arc_start{}, arc_end{};
  std::vector<LedgerEntry> ledger;
};

// Raised by advance_stage when the certificates cannot be met within the
// retry budget; carries the last attempt for diagnosis.
class StageFailure : public Error {
 public:
  StageFailure(std::string certificate, double margin, StageState attempt, const std::string& detail);
  const std::string& certificate() const { return cert_; }
  double margin() const { return margin_; }
  const StageState& attempt() const { return attempt_; }

 private:
  std::string cert_;
  double margin_;
  StageState attempt_;
};

struct RunResult {
  std::vector<StageState> stages;
  bool ok = true;
  std::optional<StageState> failed_attempt;
  std::string failure_certificate;
  double failure_margin = 0.0;
  std::string failure_message;
};

// Sample grid: uniform nx x ny over D = [-2,2] x [0,2] plus rows at
// y = 1/(j+1), j = 1..max_stage+1.
std::vector<double> grid_xs(const StageConfig& cfg);
std::vector<double> grid_ys(const StageConfig& cfg);

StageState init_stage(const StageConfig& cfg);
StageState advance_stage(const StageState& prev, const StageConfig& cfg);
RunResult run(const StageConfig& cfg);

// Certificates for stage n from samples (prev may be null for n = 1).
struct SamplePoint {
  cplx z;
  Vec3 x;
};
Certificates certify(int n, double epsilon, const std::vector<SamplePoint>& cur, const std::vector<SamplePoint>* prev,
                     double* sup_diff = nullptr);
std::vector<LedgerEntry> properness_ledger(int k, double epsilon, const std::vector<SamplePoint>& cur);
std::vector<SamplePoint> to_points(const GridSamples& g);

}  // namespace weierforge
