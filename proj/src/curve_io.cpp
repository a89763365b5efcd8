#include "leash/curve_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace leash {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

bool has_json_extension(const std::string& path) {
  auto dot = path.find_last_of('.');
  if (dot == std::string::npos) return false;
  std::string ext = path.substr(dot);
  for (char& c : ext) c = static_cast<char>(std::tolower(c));
  return ext == ".json";
}

std::vector<Point> parse_point_rows(const nlohmann::json& rows,
                                    const std::string& origin) {
  if (!rows.is_array() || rows.empty()) {
    throw ParseError(origin + ": expected a non-empty array of vectors");
  }
  std::vector<Point> points;
  points.reserve(rows.size());
  for (const auto& row : rows) {
    if (!row.is_array() || row.empty()) {
      throw ParseError(origin + ": each vector must be a non-empty array");
    }
    Point p;
    p.reserve(row.size());
    for (const auto& x : row) {
      if (!x.is_number()) {
        throw ParseError(origin + ": coordinates must be numbers");
      }
      double v = x.get<double>();
      if (!std::isfinite(v)) {
        throw ParseError(origin + ": coordinates must be finite");
      }
      p.push_back(v);
    }
    points.push_back(std::move(p));
  }
  return points;
}

std::vector<Point> load_points_json(const std::string& path,
                                    const char* member) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (doc.is_object()) {
    if (!doc.contains(member)) {
      throw ParseError(path + ": object is missing \"" + member +
                       "\" member");
    }
    return parse_point_rows(doc[member], path);
  }
  return parse_point_rows(doc, path);
}

}  // namespace

PolygonalCurve parse_curve_text(const std::string& text,
                                const std::string& origin) {
  std::vector<Point> vertices;
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    for (char& c : line) {
      if (c == ',' || c == ';' || c == '\t' || c == '\r') c = ' ';
    }
    std::istringstream fields(line);
    std::string field;
    Point p;
    while (fields >> field) {
      if (field.front() == '#') break;
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(field, &used);
      } catch (const std::exception&) {
        throw ParseError(origin + ":" + std::to_string(lineno) +
                         ": not a number: " + field);
      }
      if (used != field.size()) {
        throw ParseError(origin + ":" + std::to_string(lineno) +
                         ": not a number: " + field);
      }
      if (!std::isfinite(v)) {
        throw ParseError(origin + ":" + std::to_string(lineno) +
                         ": coordinates must be finite");
      }
      p.push_back(v);
    }
    if (p.empty()) continue;
    if (!vertices.empty() && p.size() != vertices.front().size()) {
      throw ParseError(origin + ":" + std::to_string(lineno) +
                       ": vertex dimension changed from " +
                       std::to_string(vertices.front().size()) + " to " +
                       std::to_string(p.size()));
    }
    vertices.push_back(std::move(p));
  }
  if (vertices.empty()) {
    throw ParseError(origin + ": no vertices found");
  }
  return PolygonalCurve(std::move(vertices));
}

PolygonalCurve load_curve(const std::string& path) {
  if (has_json_extension(path)) {
    std::vector<Point> vertices = load_points_json(path, "vertices");
    for (const Point& p : vertices) {
      if (p.size() != vertices.front().size()) {
        throw ParseError(path + ": vertex dimensions are inconsistent");
      }
    }
    return PolygonalCurve(std::move(vertices));
  }
  return parse_curve_text(read_file(path), path);
}

void write_curve_csv(const std::string& path, const PolygonalCurve& curve) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out.precision(17);
  for (std::size_t i = 0; i < curve.vertex_count(); ++i) {
    const Point& p = curve.vertex(i);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out << ',';
      out << p[k];
    }
    out << '\n';
  }
  if (!out) throw ParseError("failed writing file: " + path);
}

std::vector<Point> load_facet_normals(const std::string& path) {
  return load_points_json(path, "normals");
}

}  // namespace leash
