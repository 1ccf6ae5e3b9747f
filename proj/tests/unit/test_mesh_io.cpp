#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "weierforge/mesh_io.hpp"

using namespace weierforge;

namespace {
GridSamples small_grid() {
  Immersion im;
  const CompactSet K = CompactSet::disk(0.0, 1.5);
  im.triple = from_spin_data({HoloFunction::identity(), OneForm(HoloFunction::identity())}, K);
  im.domain = K;
  im.base_value = {1.0 / 3.0, -2.0, 1e-17};
  return sample_grid(im, linspace(-0.5, 0.5, 5), linspace(-0.25, 0.5, 4));
}
}  // namespace

TEST_CASE("CSV round trip is exact") {
  const GridSamples g = small_grid();
  const std::string csv = to_csv(g);
  CHECK(csv.rfind("zre,zim,x1,x2,x3\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  const std::vector<CsvRow> rows = parse_csv(csv);
  REQUIRE(rows.size() == g.z.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(rows[k].z == g.z[k]);
    CHECK(rows[k].x == g.x[k]);
  }
  CHECK(to_csv(small_grid()) == csv);
}

TEST_CASE("OBJ layout") {
  const GridSamples g = small_grid();
  std::istringstream in(to_obj(g));
  int v = 0, f = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("v ", 0) == 0) ++v;
    if (line.rfind("f ", 0) == 0) {
      ++f;
      std::istringstream ls(line.substr(2));
      int a, b, c, d;
      ls >> a >> b >> c >> d;
      CHECK(a >= 1);
      CHECK(d <= 20);
    }
  }
  CHECK(v == 20);
  CHECK(f == 12);
}

TEST_CASE("atomic writes leave no temporaries") {
  const auto dir = std::filesystem::temp_directory_path() / "weierforge_mesh_io_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::string p = (dir / "a.txt").string();
  write_file_atomic(p, "one\n");
  write_file_atomic(p, "two\n");
  std::ifstream in(p);
  std::string s((std::istreambuf_iterator<char>(in)), {});
  CHECK(s == "two\n");
  int n = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++n;
  CHECK(n == 1);
  std::filesystem::remove_all(dir);
}
