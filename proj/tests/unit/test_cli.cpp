#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "suites.hpp"
#include "weierforge/builder.hpp"
#include "weierforge/mesh_io.hpp"

using namespace weierforge;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string(WEIERFORGE_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch(const char* name) {
  const fs::path d = fs::temp_directory_path() / name;
  fs::remove_all(d);
  return d;
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(cli("build --stages 1").code == 2);
  CHECK(cli("check --suite nonsense").code == 2);
  CHECK(cli("build --stages 1 --grid 12 --out /tmp/x").code == 2);
  CHECK(cli("").code == 2);
}

TEST_CASE("flux presets") {
  const Run id = cli("flux --preset catenoid --target 0,0,6.283185307179586");
  CHECK(id.code == 0);
  const auto j = nlohmann::json::parse(id.out);
  CHECK(j["converged"] == true);
  CHECK(j["max_flux_error"].get<double>() < 1e-10);

  const Run solved = cli("flux --preset catenoid --target 1,2,3 --degree 4");
  CHECK(solved.code == 0);
  CHECK(nlohmann::json::parse(solved.out)["converged"] == true);

  const Run low = cli("flux --preset catenoid --target 1,2,3 --degree 0");
  CHECK(low.code == 3);
  CHECK(nlohmann::json::parse(low.out)["error"] == "RankDeficient");
}

TEST_CASE("check suites") {
  CHECK(cli("check --suite harmonicity --h 1/16,1/32,1/64").code == 0);
  CHECK(cli("check").code == 0);
  const suites::HarmonicityFit f = suites::harmonicity_fit({1.0 / 16, 1.0 / 32, 1.0 / 64});
  // x3 = Re z^4 / 4: the five-point Laplacian is exactly h^2 (mpmath)
  CHECK(f.max_lap[0][2] == doctest::Approx(0.00390625).epsilon(1e-6));
}

TEST_CASE("build stage 1, report round trip and determinism") {
  const fs::path a = scratch("weierforge_cli_a"), b = scratch("weierforge_cli_b");
  REQUIRE(cli("build --stages 1 --grid 40x40 --out " + a.string()).code == 0);
  REQUIRE(cli("build --stages 1 --grid 40x40 --out " + b.string()).code == 0);
  CHECK(fs::exists(a / "stage_1.obj"));
  const std::string csv = slurp(a / "stage_1.csv");
  CHECK(csv == slurp(b / "stage_1.csv"));

  const auto report = nlohmann::json::parse(slurp(a / "report.json"));
  std::vector<SamplePoint> pts;
  for (const CsvRow& r : parse_csv(csv)) pts.push_back({r.z, r.x});
  const Certificates c = certify(1, report["config"]["epsilon"].get<double>(), pts, nullptr);
  const auto& m = report["stages"][0]["cert_margins"];
  CHECK(std::abs(m["ii"].get<double>() - *c.ii) <= 1e-12);
  if (!m["iv"].is_null()) CHECK(std::abs(m["iv"].get<double>() - *c.iv) <= 1e-12);
  fs::remove_all(a);
  fs::remove_all(b);
}
