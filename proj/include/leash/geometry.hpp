#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace leash {

// A point in R^d.
using Point = std::vector<double>;

// Thrown when two objects that must share an ambient dimension do not.
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

double dot(const Point& u, const Point& v);
Point subtract(const Point& u, const Point& v);
double squared_norm(const Point& u);
double euclidean_norm(const Point& u);

// A polygonal curve with at least one vertex.  A single-vertex input is
// normalized to one zero-length segment so every curve has segment_count >= 1.
class PolygonalCurve {
 public:
  explicit PolygonalCurve(std::vector<Point> vertices);

  std::size_t dimension() const { return vertices_.front().size(); }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t segment_count() const { return vertices_.size() - 1; }
  const Point& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::vector<Point>& vertices() const { return vertices_; }

  // Evaluate at global parameter t in [0, segment_count()]; clamped outside.
  Point eval(double t) const;

 private:
  std::vector<Point> vertices_;
};

struct Line {
  double slope = 0.0;
  double intercept = 0.0;
  double at(double x) const { return slope * x + intercept; }
};

struct MinPoint {
  double lambda = 0.0;
  double value = 0.0;
};

struct EnvelopePiece {
  double lo = 0.0;
  double hi = 0.0;
  Line line;
};

// Pieces of the pointwise maximum of `lines` restricted to [lo, hi],
// ordered by increasing slope (left to right).
std::vector<EnvelopePiece> upper_envelope_pieces(std::vector<Line> lines,
                                                 double lo, double hi);

// Minimum of the pointwise maximum of `lines` over [lo, hi].
MinPoint min_of_upper_envelope(const std::vector<Line>& lines, double lo,
                               double hi);

// Distance from a fixed point to a moving point on a segment, as a function
// of the segment parameter lambda in [0, 1].  Convex in lambda for every
// supported metric.  Values are in the metric's native units (squared for
// the squared-Euclidean metric).
struct BoundaryProfile {
  enum class Kind { Parabola, PiecewiseLinear };

  Kind kind = Kind::PiecewiseLinear;

  // Parabola: value(l) = quad*l^2 + lin*l + offset, quad >= 0.
  double quad = 0.0;
  double lin = 0.0;
  double offset = 0.0;

  // PiecewiseLinear: value(l) = max over lines of slope*l + intercept.
  std::vector<Line> lines;

  double min_lambda = 0.0;
  double min_value = 0.0;

  double operator()(double lambda) const;

  // Running minimum from the left: min over mu in [0, lambda] of value(mu).
  // Equals the profile on its decreasing part and min_value afterwards.
  double truncated(double lambda) const {
    return lambda <= min_lambda ? (*this)(lambda) : min_value;
  }
};

enum class MetricKind {
  EuclideanSquared,
  L1,
  LInfinity,
  Polytope,
  RegularPolygon2D,
};

// A convex distance function on R^d.  Point-pair values and boundary
// profiles are in native units; report() converts a native value to the
// reported distance (square root for the squared-Euclidean metric).
class Metric {
 public:
  static Metric euclidean_squared();
  static Metric l1();
  static Metric l_infinity();
  // Facet normals of the unit ball's polar: gauge(v) = max_l <w_l, v>.
  // The set must be closed under negation and span R^d.
  static Metric polytope(std::vector<Point> facet_normals);
  // Regular polygon with `sides` >= 3 sides circumscribed about the unit
  // circle, oriented per segment with one side parallel to the segment.
  // Approximates the Euclidean metric within a factor 1/cos(pi/sides).
  static Metric regular_polygon(int sides);

  MetricKind kind() const { return kind_; }
  bool reports_squared() const { return kind_ == MetricKind::EuclideanSquared; }
  int polygon_sides() const { return sides_; }
  const std::vector<Point>& facet_normals() const { return normals_; }
  const std::string& name() const { return name_; }

  double operator()(const Point& p, const Point& q) const;
  double report(double native) const;

  // Profile of the distance from p to a + lambda*(b - a), lambda in [0, 1].
  BoundaryProfile boundary_profile(const Point& p, const Point& a,
                                   const Point& b) const;

 private:
  Metric() = default;

  MetricKind kind_ = MetricKind::EuclideanSquared;
  std::vector<Point> normals_;       // Polytope facets.
  int sides_ = 0;                    // RegularPolygon2D.
  std::vector<double> cos_;          // Polygon normal directions, closed
  std::vector<double> sin_;          // under negation.
  double axis_gain_ = 1.0;           // Polygon gauge of a unit vector when a
                                     // side is parallel to it.
  std::string name_;
};

// Smallest number of polygon sides k >= 3 with 1/cos(pi/k) <= 1 + epsilon.
int polygon_sides_for_epsilon(double epsilon);

}  // namespace leash
