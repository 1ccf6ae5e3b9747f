#pragma once

#include <string>

#include "weierforge/weierstrass.hpp"

namespace weierforge {

// Writes `content` to `path` via a temporary file in the same directory and a rename.
void write_file_atomic(const std::string& path, const std::string& content);

// OBJ text: "v x1 x2 x3" per grid point (row-major), then 1-based quad faces.
std::string to_obj(const GridSamples& g);
// CSV with header zre,zim,x1,x2,x3 and %.17g numbers.
std::string to_csv(const GridSamples& g);

struct CsvRow {
  cplx z;
  Vec3 x;
};
std::vector<CsvRow> parse_csv(const std::string& text);

}  // namespace weierforge
