#include "weierforge/report.hpp"

#include <json.hpp>

namespace weierforge {

namespace {

using nlohmann::json;

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json vec(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json stage_json(const StageState& s) {
  json j;
  j["stage"] = s.n;
  j["mu"] = s.mu;
  j["lambda"] = s.lambda;
  j["t0"] = s.t0;
  j["cert_margins"] = {{"i", opt(s.cert.i)}, {"ii", opt(s.cert.ii)}, {"iii", opt(s.cert.iii)}, {"iv", opt(s.cert.iv)}};
  j["cert_iv_vacuous"] = s.cert.iv_vacuous;
  json ledger = json::array();
  for (const auto& e : s.ledger)
    ledger.push_back({{"n", e.n},
                      {"min_value", e.min_value},
                      {"bound", e.bound},
                      {"margin", e.margin()},
                      {"escape_value", e.escape_value},
                      {"points", e.points}});
  j["properness_ledger"] = ledger;
  j["sup_diff_prev"] = s.sup_diff_prev;
  j["min_metric"] = s.min_metric;
  j["fit_degree"] = s.fit_degree;
  j["fit_error"] = s.fit_error;
  j["shoot_residual"] = s.shoot_residual;
  j["retries"] = s.retries;
  j["quad_tol"] = s.quad_tol;
  j["arc"] = json::array({json::array({s.arc_start.real(), s.arc_start.imag()}),
                          json::array({s.arc_end.real(), s.arc_end.imag()})});
  return j;
}

}  // namespace

std::string build_report_json(const StageConfig& cfg, const RunResult& r) {
  json j;
  j["config"] = {{"epsilon", cfg.epsilon},       {"stages", cfg.max_stage},     {"grid", {cfg.nx, cfg.ny}},
                 {"seed", cfg.seed},             {"lift", cfg.lift},           {"quad_tol", cfg.quad_tol},
                 {"shoot_tol", cfg.shoot_tol},   {"max_retries", cfg.max_retries}, {"max_degree", cfg.max_degree}};
  json stages = json::array();
  for (const auto& s : r.stages) stages.push_back(stage_json(s));
  j["stages"] = stages;
  j["status"] = r.ok ? "ok" : "failed";
  if (r.ok) {
    j["failure"] = nullptr;
  } else {
    json f = {{"certificate", r.failure_certificate}, {"margin", r.failure_margin}, {"message", r.failure_message}};
    if (r.failed_attempt) f["attempt"] = stage_json(*r.failed_attempt);
    j["failure"] = f;
  }
  return j.dump(2) + "\n";
}

std::string flux_report_json(const PeriodProblem& pp, const PeriodReport& rep) {
  json j;
  j["converged"] = rep.converged;
  j["iterations"] = rep.iterations;
  j["param_degree"] = pp.param_degree;
  j["jacobian_rank"] = rep.rank;
  j["equations"] = rep.equations;
  j["unknowns"] = rep.unknowns;
  j["singular_values"] = rep.singular_values;
  j["residual_history"] = rep.residual_history;
  json loops = json::array();
  for (std::size_t i = 0; i < rep.flux.size(); ++i)
    loops.push_back({{"target", vec(pp.target_flux[i])}, {"flux", vec(rep.flux[i])}, {"real_period", vec(rep.real_periods[i])}});
  j["loops"] = loops;
  j["max_real_period"] = rep.max_real_period;
  j["max_flux_error"] = rep.max_flux_error;
  return j.dump(2) + "\n";
}

}  // namespace weierforge
