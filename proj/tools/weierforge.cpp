// weierforge: build staged immersions, solve flux problems, run invariant suites.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "suites.hpp"
#include "weierforge/builder.hpp"
#include "weierforge/mesh_io.hpp"
#include "weierforge/periods.hpp"
#include "weierforge/report.hpp"

namespace fs = std::filesystem;
using namespace weierforge;
using nlohmann::json;

namespace {

constexpr int kUsage = 2;

bool parse_grid(const std::string& s, int& w, int& h) {
  const auto x = s.find_first_of("xX");
  if (x == std::string::npos) return false;
  try {
    std::size_t a = 0, b = 0;
    w = std::stoi(s.substr(0, x), &a);
    h = std::stoi(s.substr(x + 1), &b);
    return a == x && b == s.size() - x - 1 && w >= 2 && h >= 2;
  } catch (const std::exception&) {
    return false;
  }
}

// "1/16" or "0.0625".
bool parse_fraction(const std::string& s, double& v) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
      std::size_t n = 0;
      v = std::stod(s, &n);
      return n == s.size() && v > 0;
    }
    const double num = std::stod(s.substr(0, slash)), den = std::stod(s.substr(slash + 1));
    v = num / den;
    return den != 0 && v > 0;
  } catch (const std::exception&) {
    return false;
  }
}

int cmd_build(const StageConfig& cfg, const std::string& out) {
  fs::create_directories(out);
  const RunResult r = run(cfg);
  for (const StageState& s : r.stages) {
    const std::string stem = (fs::path(out) / ("stage_" + std::to_string(s.n))).string();
    write_file_atomic(stem + ".obj", to_obj(s.samples));
    write_file_atomic(stem + ".csv", to_csv(s.samples));
  }
  const std::string report = build_report_json(cfg, r);
  write_file_atomic((fs::path(out) / "report.json").string(), report);
  if (!r.ok) {
    json payload = {{"error", "StageFailed"},
                    {"stage", r.failed_attempt ? r.failed_attempt->n : -1},
                    {"certificate", r.failure_certificate},
                    {"margin", r.failure_margin},
                    {"message", r.failure_message}};
    std::cerr << payload.dump(2) << "\n";
    return 1;
  }
  std::printf("wrote %zu stage(s) to %s\n", r.stages.size(), out.c_str());
  return 0;
}

int cmd_flux(const std::string& preset, const std::vector<double>& target, int degree) {
  if (preset != "catenoid") {
    std::cerr << "unknown preset '" << preset << "' (available: catenoid)\n";
    return kUsage;
  }
  if (target.size() != 3) {
    std::cerr << "--target needs three comma separated numbers\n";
    return kUsage;
  }
  const PeriodProblem pp = catenoid_problem({target[0], target[1], target[2]}, degree);
  try {
    const PeriodSolution sol = solve_periods(pp);
    std::cout << flux_report_json(pp, sol.report) << "\n";
    return sol.report.converged ? 0 : 3;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::RankDeficient && e.kind() != ErrorKind::NewtonDiverged) throw;
    json j = {{"status", "failed"}, {"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    std::cout << j.dump(2) << "\n";
    return 3;
  }
}

int cmd_check(const std::string& suite, const std::vector<std::string>& h_args) {
  std::vector<double> hs;
  for (const auto& s : h_args) {
    double v = 0;
    if (!parse_fraction(s, v)) {
      std::cerr << "bad spacing '" << s << "'\n";
      return kUsage;
    }
    hs.push_back(v);
  }
  std::vector<suites::SuiteResult> results;
  if (!suites::run_named(suite, hs, results)) {
    std::cerr << "unknown suite '" << suite << "' (available:";
    for (const auto& n : suites::names()) std::cerr << " " << n;
    std::cerr << ")\n";
    return kUsage;
  }
  bool all = true;
  for (const auto& r : results) {
    for (const auto& l : r.lines) {
      std::printf("%-4s %-12s %-48s %s\n", l.pass ? "PASS" : "FAIL", r.name.c_str(), l.what.c_str(),
                  l.detail.c_str());
      all = all && l.pass;
    }
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weierforge: staged minimal immersions and flux prescription"};
  app.require_subcommand(1);

  StageConfig cfg;
  std::string grid = "128x128", out;
  auto* build = app.add_subcommand("build", "run the staged construction and write meshes + report");
  build->add_option("--stages", cfg.max_stage, "number of stages")->check(CLI::PositiveNumber);
  build->add_option("--epsilon", cfg.epsilon, "approximation budget")->check(CLI::PositiveNumber);
  build->add_option("--grid", grid, "sample grid WxH");
  build->add_option("--out", out, "output directory")->required();
  build->add_option("--seed", cfg.seed, "seed for arc re-randomization");
  build->add_option("--lift", cfg.lift, "clearance of X_1 above the first wedge");

  std::string preset = "catenoid";
  std::vector<double> target{0.0, 0.0, 2.0 * kPi};
  int degree = 4;
  auto* fluxc = app.add_subcommand("flux", "prescribe the flux of a preset annulus");
  fluxc->add_option("--preset", preset, "problem preset");
  fluxc->add_option("--target", target, "target flux a,b,c")->delimiter(',')->expected(3);
  fluxc->add_option("--degree", degree, "Laurent degree of the corrections")->check(CLI::NonNegativeNumber);

  std::string suite;
  std::vector<std::string> h_args{"1/16", "1/32", "1/64"};
  auto* check = app.add_subcommand("check", "run invariant suites");
  check->set_help_flag("--help", "print this help message and exit");  // frees --h for spacings
  check->add_option("--suite", suite, "suite name (default: all)");
  check->add_option("--h", h_args, "grid spacings for harmonicity")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build) {
      if (!parse_grid(grid, cfg.nx, cfg.ny)) {
        std::cerr << "--grid expects WxH, e.g. 128x128\n";
        return kUsage;
      }
      const QuadratureOptions q = QuadratureOptions::from_env();
      cfg.quad_tol = q.rel_tol;
      cfg.validate();
      return cmd_build(cfg, out);
    }
    if (*fluxc) return cmd_flux(preset, target, degree);
    return cmd_check(suite, h_args);
  } catch (const Error& e) {
    json j = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    std::cerr << j.dump(2) << "\n";
    return e.kind() == ErrorKind::InvalidArgument ? kUsage : 1;
  }
}
