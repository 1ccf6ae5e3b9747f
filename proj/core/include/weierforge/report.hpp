#pragma once

#include <string>

#include "weierforge/builder.hpp"
#include "weierforge/periods.hpp"

namespace weierforge {

// report.json for a builder run:
// {config, stages: [{stage, mu, lambda, t0, cert_margins{i..iv},
//  properness_ledger[], sup_diff_prev, ...}], status, failure}.
std::string build_report_json(const StageConfig& cfg, const RunResult& r);

// Flux-solve report (achieved flux, residuals, Jacobian rank).
std::string flux_report_json(const PeriodProblem& pp, const PeriodReport& rep);

}  // namespace weierforge
