#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "leash/geometry.hpp"

namespace leash {

// Malformed or unreadable input data (files, numbers, structure).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Load a curve from a file.  ".json" files hold either an array of vertex
// arrays or an object with a "vertices" member; anything else is read as
// delimited text with one vertex per line (comma and/or whitespace
// separated), blank lines and lines starting with '#' skipped.  Vertices
// must be finite and share one dimension.
PolygonalCurve load_curve(const std::string& path);

// Parse curve text in the delimited-text format described above.
PolygonalCurve parse_curve_text(const std::string& text,
                                const std::string& origin);

void write_curve_csv(const std::string& path, const PolygonalCurve& curve);

// Load polytope facet normals from a JSON file: an array of vectors or an
// object with a "normals" member.
std::vector<Point> load_facet_normals(const std::string& path);

}  // namespace leash
