#include "weierforge/mesh_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "weierforge/error.hpp"

namespace weierforge {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot open " + tmp + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error(ErrorKind::InvalidArgument, "write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorKind::InvalidArgument, "rename to " + path + " failed: " + ec.message());
}

std::string to_obj(const GridSamples& g) {
  std::string s;
  s.reserve(g.x.size() * 64);
  for (const Vec3& p : g.x) s += "v " + fmt17(p[0]) + " " + fmt17(p[1]) + " " + fmt17(p[2]) + "\n";
  const std::size_t nx = g.nx();
  for (std::size_t j = 0; j + 1 < g.ny(); ++j)
    for (std::size_t i = 0; i + 1 < nx; ++i) {
      const std::size_t a = j * nx + i + 1;  // 1-based
      s += "f " + std::to_string(a) + " " + std::to_string(a + 1) + " " + std::to_string(a + 1 + nx) + " " +
           std::to_string(a + nx) + "\n";
    }
  return s;
}

std::string to_csv(const GridSamples& g) {
  std::string s = "zre,zim,x1,x2,x3\n";
  s.reserve(g.x.size() * 100);
  for (std::size_t k = 0; k < g.x.size(); ++k) {
    s += fmt17(g.z[k].real()) + "," + fmt17(g.z[k].imag()) + "," + fmt17(g.x[k][0]) + "," + fmt17(g.x[k][1]) +
         "," + fmt17(g.x[k][2]) + "\n";
  }
  return s;
}

std::vector<CsvRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "zre,zim,x1,x2,x3")
    throw Error(ErrorKind::InvalidArgument, "unexpected CSV header");
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double v[5];
    std::istringstream ls(line);
    for (int k = 0; k < 5; ++k) {
      std::string cell;
      if (!std::getline(ls, cell, ',')) throw Error(ErrorKind::InvalidArgument, "short CSV row");
      v[k] = std::stod(cell);
    }
    rows.push_back({cplx(v[0], v[1]), Vec3(v[2], v[3], v[4])});
  }
  return rows;
}

}  // namespace weierforge
