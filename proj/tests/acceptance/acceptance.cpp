// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>

#include <json.hpp>

#include "suites.hpp"
#include "weierforge/builder.hpp"
#include "weierforge/deform.hpp"
#include "weierforge/mesh_io.hpp"
#include "weierforge/periods.hpp"
#include "weierforge/report.hpp"
#include "weierforge/runge.hpp"

using namespace weierforge;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

HoloFunction zk(int k) { return HoloFunction::laurent_about(0.0, {{k, 1.0}}); }

Outcome residues() {
  const auto t0 = std::chrono::steady_clock::now();
  const Path c = Path::circle(0.0, 1.0);
  const double e = std::abs(integrate(OneForm(zk(-1)), c) - cplx(0.0, 2.0 * kPi));
  double pattern = 0.0;
  for (int k = -5; k <= 5; ++k)
    if (k != -1) pattern = std::max(pattern, std::abs(integrate(OneForm(zk(k)), c)));
  const double s = seconds_since(t0);
  return {e <= 1e-10 && pattern <= 1e-10 && s < 1.0,
          fmt("|dz/z - 2pi i| = %.2e, max other |res| = %.2e, %.3f s", e, pattern, s)};
}

Outcome catenoid_flux() {
  const PeriodProblem pp = catenoid_problem({0.0, 0.0, 2.0 * kPi}, 0);
  const NullTriple t = from_spin_data(pp.sd, pp.domain);
  const Path loop = Path::circle(0.0, 1.0);
  const double fe = norm(flux(t, loop) - Vec3{0.0, 0.0, 2.0 * kPi});
  const double rp = norm(real_period(t, loop));
  return {fe <= 1e-8 && rp <= 1e-10, fmt("flux error %.2e, |real period| %.2e", fe, rp)};
}

Outcome enneper_closed_form() {
  const CompactSet K = CompactSet::disk(0.0, 2.0);
  Immersion im;
  im.triple = from_spin_data(suites::enneper(1), K);
  im.domain = K;
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> r(0.0, 1.8), a(0.0, 2.0 * kPi);
  double worst = 0.0;
  for (int s = 0; s < 25; ++s) {
    const cplx z = std::polar(r(rng), a(rng));
    worst = std::max(worst, norm(immerse(im, z) - suites::enneper_closed(z)));
  }
  return {worst <= 1e-9, fmt("max deviation over 25 points %.2e", worst)};
}

Outcome harmonicity() {
  const suites::HarmonicityFit f = suites::harmonicity_fit({1.0 / 16, 1.0 / 32, 1.0 / 64});
  const double lo = std::min({f.slope[0], f.slope[1], f.slope[2]});
  return {lo >= 1.9 && f.seconds < 10.0,
          fmt("slopes (%.4f, %.4f, %.4f), %.2f s", f.slope[0], f.slope[1], f.slope[2], f.seconds)};
}

Outcome runge() {
  const CompactSet disk = CompactSet::disk(0.0, 1.0);
  const HoloFunction f = HoloFunction::laurent_about(2.0, {{-1, 1.0}});
  RungeOptions o;
  o.fixed_degree = 21;
  const Approximation a = approx_with_divisor(f, disk, {}, 1e-6, o);
  const Approximation b = approx_with_divisor(f, disk, Divisor({{0.0, 2}}), 1e-5);
  cplx v, d, fv, fd;
  b.f.eval_with_derivative(0.0, v, d);
  f.eval_with_derivative(0.0, fv, fd);
  const double jet = std::max(std::abs(v - fv), std::abs(d - fd));
  return {a.degree == 21 && a.sup_error <= 1e-6 && jet <= 1e-14 && b.sup_error <= 1e-5,
          fmt("deg 21 sup %.3e; with {0^2}: jet mismatch %.1e, sup %.3e (deg %g)", a.sup_error, jet, b.sup_error,
              b.degree)};
}

Outcome flux_prescription() {
  const auto t0 = std::chrono::steady_clock::now();
  const PeriodProblem pp = catenoid_problem({1.0, 2.0, 3.0}, 4);
  try {
    const PeriodSolution s = solve_periods(pp);
    const NullTriple t = from_spin_data(s.sd, pp.domain, false);
    const double fe = norm(flux(t, pp.basis[0]) - Vec3{1.0, 2.0, 3.0});
    const double rp = norm(real_period(t, pp.basis[0]));
    const bool full = s.report.rank == s.report.equations;
    const double sec = seconds_since(t0);
    return {s.report.converged && fe <= 1e-8 && rp <= 1e-10 && full && sec < 30.0,
            fmt("flux error %.2e, |real period| %.2e, rank %g/6, %.2f s", fe, rp, s.report.rank, sec)};
  } catch (const Error& e) {
    return {false, e.what()};
  }
}

// Criteria 7 and 8 share one build; its report.json is re-read from disk.
struct BuildRun {
  RunResult result;
  json report;
  double seconds = 0.0;
};

const BuildRun& stage_build() {
  static const BuildRun br = [] {
    BuildRun b;
    StageConfig cfg;
    cfg.epsilon = 0.5;
    cfg.max_stage = 3;
    cfg.nx = cfg.ny = 128;
    const auto t0 = std::chrono::steady_clock::now();
    b.result = run(cfg);
    b.seconds = seconds_since(t0);
    const fs::path dir = fs::temp_directory_path() / "weierforge_acceptance";
    fs::create_directories(dir);
    const std::string path = (dir / "report.json").string();
    write_file_atomic(path, build_report_json(cfg, b.result));
    std::ifstream in(path);
    b.report = json::parse(in);
    return b;
  }();
  return br;
}

Outcome stage_certificates() {
  const BuildRun& b = stage_build();
  std::string detail;
  bool ok = true;
  for (int k = 2; k <= 3; ++k) {
    const json* st = nullptr;
    for (const auto& s : b.report["stages"])
      if (s["stage"] == k) st = &s;
    if (!st) {
      ok = false;
      detail += fmt("k=%g missing; ", k);
      continue;
    }
    for (const char* name : {"i", "ii", "iii", "iv"}) {
      const json& m = (*st)["cert_margins"][name];
      const bool vac = std::string(name) == "iv" && (*st)["cert_iv_vacuous"] == true;
      if (vac) continue;
      if (m.is_null() || m.get<double>() <= 0.0) ok = false;
      detail += fmt("k=%g ", k) + name + "=" + (m.is_null() ? "null" : fmt("%.3g", m.get<double>())) + " ";
    }
  }
  if (!b.result.ok)
    detail += "| stage " + std::to_string(b.result.failed_attempt ? b.result.failed_attempt->n : -1) +
              " failed cert(" + b.result.failure_certificate + ") margin " + fmt("%.3g", b.result.failure_margin);
  detail += fmt(" (%.0f s)", b.seconds);
  return {ok && b.result.ok, detail};
}

Outcome properness() {
  const BuildRun& b = stage_build();
  if (b.result.stages.size() < 3) return {false, "no stage-3 output (stages completed: " +
                                                     std::to_string(b.result.stages.size()) + ")"};
  const auto& last = b.report["stages"].back();
  bool ok = true;
  std::string detail;
  for (const auto& e : last["properness_ledger"]) {
    const double v = e["min_value"].get<double>(), bound = e["bound"].get<double>();
    ok = ok && v >= bound;
    detail += fmt("n=%g min %.4g >= %.4g; ", e["n"].get<double>(), v, bound);
  }
  return {ok && last["properness_ledger"].size() == 2, detail};
}

Outcome rotation() {
  const suites::SuiteResult r = suites::rotation();
  bool ok = true;
  std::string detail;
  for (std::size_t k = 0; k < 3; ++k) {
    ok = ok && r.lines[k].pass;
    detail += r.lines[k].detail + "; ";
  }
  return {ok, detail};
}

Outcome determinism() {
#ifdef WEIERFORGE_CLI
  const auto build = [](const fs::path& out) {
    fs::remove_all(out);
    const std::string cmd = std::string(WEIERFORGE_CLI) +
                            " build --stages 3 --epsilon 0.5 --grid 64x64 --seed 0 --out " + out.string() +
                            " >/dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  const fs::path a = fs::temp_directory_path() / "weierforge_det_a", b = fs::temp_directory_path() / "weierforge_det_b";
  build(a);
  build(b);
  int files = 0;
  bool same = true;
  for (int n = 1; n <= 3; ++n) {
    const fs::path fa = a / ("stage_" + std::to_string(n) + ".csv"), fb = b / ("stage_" + std::to_string(n) + ".csv");
    if (!fs::exists(fa) && !fs::exists(fb)) continue;
    if (fs::exists(fa) != fs::exists(fb)) {
      same = false;
      continue;
    }
    std::ifstream ia(fa, std::ios::binary), ib(fb, std::ios::binary);
    const std::string sa{std::istreambuf_iterator<char>(ia), {}}, sb{std::istreambuf_iterator<char>(ib), {}};
    same = same && sa == sb;
    ++files;
  }
  fs::remove_all(a);
  fs::remove_all(b);
  return {same && files > 0, fmt("%g CSV file(s) compared, identical: ", files) + (same ? "yes" : "no")};
#else
  return {false, "built without the command line tool"};
#endif
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 residue oracle", residues},
      {"2 catenoid flux", catenoid_flux},
      {"3 Enneper closed form", enneper_closed_form},
      {"4 harmonicity convergence", harmonicity},
      {"5 Runge with divisor", runge},
      {"6 flux prescription", flux_prescription},
      {"7 stage certificates", stage_certificates},
      {"8 properness ledger", properness},
      {"9 rotation compatibility", rotation},
      {"10 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %-28s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
