#include "leash/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace leash {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_same_dimension(const Point& u, const Point& v) {
  if (u.size() != v.size()) {
    throw DimensionMismatch("points have dimensions " +
                            std::to_string(u.size()) + " and " +
                            std::to_string(v.size()));
  }
}

bool finite_point(const Point& p) {
  return std::all_of(p.begin(), p.end(),
                     [](double x) { return std::isfinite(x); });
}

// Upper hull of a set of lines: the subset attaining the pointwise maximum,
// ordered by increasing slope, with the crossing abscissas between
// consecutive hull lines strictly increasing.
struct HullWalk {
  std::vector<Line> lines;       // hull lines, slope ascending
  std::vector<double> left;      // left[i]: where lines[i] becomes active
};

double crossing(const Line& a, const Line& b) {
  // Valid for a.slope != b.slope.
  return (a.intercept - b.intercept) / (b.slope - a.slope);
}

HullWalk upper_hull(std::vector<Line> lines) {
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    if (a.slope != b.slope) return a.slope < b.slope;
    return a.intercept < b.intercept;
  });
  // For equal slopes only the largest intercept can appear on the maximum.
  std::vector<Line> dedup;
  for (const Line& l : lines) {
    if (!dedup.empty() && dedup.back().slope == l.slope) dedup.pop_back();
    dedup.push_back(l);
  }

  HullWalk hull;
  for (const Line& l : dedup) {
    while (!hull.lines.empty()) {
      if (hull.lines.size() == 1) {
        // A single retained line is dropped only if `l` dominates it, which
        // cannot happen here: slopes differ and neither dominates globally.
        break;
      }
      const Line& a = hull.lines[hull.lines.size() - 2];
      const Line& b = hull.lines.back();
      // `b` contributes iff it beats `a` somewhere before `l` takes over.
      double x_al = crossing(a, l);
      if (b.at(x_al) <= a.at(x_al)) {
        hull.lines.pop_back();
        hull.left.pop_back();
      } else {
        break;
      }
    }
    if (hull.lines.empty()) {
      hull.lines.push_back(l);
      hull.left.push_back(-kInf);
    } else {
      hull.left.push_back(crossing(hull.lines.back(), l));
      hull.lines.push_back(l);
    }
  }
  return hull;
}

// Index of the hull line active at x (last piece whose left edge is <= x).
std::size_t hull_piece_at(const HullWalk& hull, double x) {
  std::size_t lo = 0, hi = hull.lines.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi + 1) / 2;
    if (hull.left[mid] <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

}  // namespace

double dot(const Point& u, const Point& v) {
  check_same_dimension(u, v);
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

Point subtract(const Point& u, const Point& v) {
  check_same_dimension(u, v);
  Point r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
  return r;
}

double squared_norm(const Point& u) {
  double s = 0.0;
  for (double x : u) s += x * x;
  return s;
}

double euclidean_norm(const Point& u) { return std::sqrt(squared_norm(u)); }

PolygonalCurve::PolygonalCurve(std::vector<Point> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) {
    throw std::invalid_argument("curve must have at least one vertex");
  }
  if (vertices_.front().empty()) {
    throw std::invalid_argument("curve vertices must have dimension >= 1");
  }
  for (const Point& p : vertices_) {
    if (p.size() != vertices_.front().size()) {
      throw DimensionMismatch("curve vertices have inconsistent dimensions");
    }
    if (!finite_point(p)) {
      throw std::invalid_argument("curve vertices must be finite");
    }
  }
  if (vertices_.size() == 1) vertices_.push_back(vertices_.front());
}

Point PolygonalCurve::eval(double t) const {
  double tmax = static_cast<double>(segment_count());
  t = std::clamp(t, 0.0, tmax);
  std::size_t i = std::min(static_cast<std::size_t>(t), segment_count() - 1);
  double frac = t - static_cast<double>(i);
  const Point& a = vertices_[i];
  const Point& b = vertices_[i + 1];
  Point r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + frac * (b[k] - a[k]);
  return r;
}

std::vector<EnvelopePiece> upper_envelope_pieces(std::vector<Line> lines,
                                                 double lo, double hi) {
  HullWalk hull = upper_hull(std::move(lines));
  std::vector<EnvelopePiece> pieces;
  for (std::size_t m = 0; m < hull.lines.size(); ++m) {
    double xl = std::max(hull.left[m], lo);
    double xr = m + 1 < hull.lines.size() ? std::min(hull.left[m + 1], hi) : hi;
    if (xl < xr) pieces.push_back({xl, xr, hull.lines[m]});
  }
  if (pieces.empty()) {
    // Degenerate window (lo == hi).
    std::size_t m = hull_piece_at(hull, lo);
    pieces.push_back({lo, hi, hull.lines[m]});
  }
  return pieces;
}

MinPoint min_of_upper_envelope(const std::vector<Line>& lines, double lo,
                               double hi) {
  if (lines.empty()) {
    return {lo, -std::numeric_limits<double>::infinity()};
  }
  HullWalk hull = upper_hull(lines);
  std::size_t m = hull_piece_at(hull, lo);
  if (hull.lines[m].slope >= 0.0) {
    return {lo, hull.lines[m].at(lo)};
  }
  // Walk right while the envelope is decreasing.
  while (m + 1 < hull.lines.size() && hull.left[m + 1] < hi &&
         hull.lines[m].slope < 0.0) {
    ++m;
  }
  if (hull.lines[m].slope < 0.0) {
    return {hi, hull.lines[m].at(hi)};
  }
  double x = std::clamp(hull.left[m], lo, hi);
  return {x, hull.lines[m].at(x)};
}

double BoundaryProfile::operator()(double lambda) const {
  if (kind == Kind::Parabola) {
    return (quad * lambda + lin) * lambda + offset;
  }
  double v = -std::numeric_limits<double>::infinity();
  for (const Line& l : lines) v = std::max(v, l.at(lambda));
  return v;
}

Metric Metric::euclidean_squared() {
  Metric m;
  m.kind_ = MetricKind::EuclideanSquared;
  m.name_ = "euclidean";
  return m;
}

Metric Metric::l1() {
  Metric m;
  m.kind_ = MetricKind::L1;
  m.name_ = "l1";
  return m;
}

Metric Metric::l_infinity() {
  Metric m;
  m.kind_ = MetricKind::LInfinity;
  m.name_ = "linf";
  return m;
}

Metric Metric::polytope(std::vector<Point> facet_normals) {
  if (facet_normals.empty()) {
    throw std::invalid_argument("polytope metric needs facet normals");
  }
  std::size_t d = facet_normals.front().size();
  if (d == 0) {
    throw std::invalid_argument("facet normals must have dimension >= 1");
  }
  for (const Point& w : facet_normals) {
    if (w.size() != d) {
      throw DimensionMismatch("facet normals have inconsistent dimensions");
    }
    if (!finite_point(w)) {
      throw std::invalid_argument("facet normals must be finite");
    }
  }
  // Symmetry: every facet normal must have its exact negation in the set.
  for (const Point& w : facet_normals) {
    bool found = false;
    for (const Point& v : facet_normals) {
      bool neg = true;
      for (std::size_t i = 0; i < d && neg; ++i) neg = (v[i] == -w[i]);
      if (neg) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument(
          "facet normals must be closed under negation");
    }
  }
  // The gauge is finite in every direction iff the normals span R^d.
  std::vector<Point> rows = facet_normals;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (std::fabs(rows[r][col]) > std::fabs(rows[pivot][col])) pivot = r;
    }
    if (std::fabs(rows[pivot][col]) <= 1e-12) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      double f = rows[r][col] / rows[rank][col];
      for (std::size_t c = 0; c < d; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  if (rank < d) {
    throw std::invalid_argument("facet normals must span the ambient space");
  }

  Metric m;
  m.kind_ = MetricKind::Polytope;
  m.normals_ = std::move(facet_normals);
  m.name_ = "polytope";
  return m;
}

Metric Metric::regular_polygon(int sides) {
  if (sides < 3) {
    throw std::invalid_argument("polygon metric needs at least 3 sides");
  }
  Metric m;
  m.kind_ = MetricKind::RegularPolygon2D;
  m.sides_ = sides;
  m.name_ = "polygon:" + std::to_string(sides);
  // Normal directions of the polygon sides, with one side parallel to the
  // reference axis, closed under negation.  For odd side counts the closure
  // doubles the set; either way the directions are evenly spaced.
  int count = sides % 2 == 0 ? sides : 2 * sides;
  double step = 2.0 * std::numbers::pi / count;
  m.cos_.reserve(count);
  m.sin_.reserve(count);
  double gain = -1.0;
  for (int l = 0; l < count; ++l) {
    double angle = std::numbers::pi / 2.0 + step * l;
    m.cos_.push_back(std::cos(angle));
    m.sin_.push_back(std::sin(angle));
    gain = std::max(gain, m.cos_.back());
  }
  m.axis_gain_ = gain;
  return m;
}

double Metric::operator()(const Point& p, const Point& q) const {
  check_same_dimension(p, q);
  switch (kind_) {
    case MetricKind::EuclideanSquared: {
      double s = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        double dxi = p[i] - q[i];
        s += dxi * dxi;
      }
      return s;
    }
    case MetricKind::L1: {
      double s = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) s += std::fabs(p[i] - q[i]);
      return s;
    }
    case MetricKind::LInfinity: {
      double s = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        s = std::max(s, std::fabs(p[i] - q[i]));
      }
      return s;
    }
    case MetricKind::Polytope: {
      if (normals_.front().size() != p.size()) {
        throw DimensionMismatch("points do not match facet normal dimension");
      }
      double s = -kInf;
      for (const Point& w : normals_) {
        double v = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) v += w[i] * (p[i] - q[i]);
        s = std::max(s, v);
      }
      return s;
    }
    case MetricKind::RegularPolygon2D: {
      double n = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        double dxi = p[i] - q[i];
        n += dxi * dxi;
      }
      return std::sqrt(n) * axis_gain_;
    }
  }
  return 0.0;
}

double Metric::report(double native) const {
  if (kind_ == MetricKind::EuclideanSquared) {
    return std::sqrt(std::max(native, 0.0));
  }
  return native;
}

BoundaryProfile Metric::boundary_profile(const Point& p, const Point& a,
                                         const Point& b) const {
  check_same_dimension(p, a);
  check_same_dimension(a, b);
  const std::size_t d = p.size();
  // Moving difference vector z(l) = z0 + l * dz.
  Point z0(d), dz(d);
  for (std::size_t i = 0; i < d; ++i) {
    z0[i] = a[i] - p[i];
    dz[i] = b[i] - a[i];
  }

  BoundaryProfile prof;
  switch (kind_) {
    case MetricKind::EuclideanSquared: {
      prof.kind = BoundaryProfile::Kind::Parabola;
      prof.quad = squared_norm(dz);
      prof.lin = 2.0 * dot(z0, dz);
      prof.offset = squared_norm(z0);
      if (prof.quad > 0.0) {
        prof.min_lambda = std::clamp(-prof.lin / (2.0 * prof.quad), 0.0, 1.0);
      } else {
        prof.min_lambda = 0.0;
      }
      prof.min_value = prof(prof.min_lambda);
      return prof;
    }
    case MetricKind::L1: {
      // Breakpoints where a coordinate of z(l) changes sign split [0, 1]
      // into pieces on which the profile is one affine function; the convex
      // profile is the maximum of those piece lines.
      std::vector<double> cuts{0.0, 1.0};
      for (std::size_t i = 0; i < d; ++i) {
        if (dz[i] != 0.0) {
          double beta = -z0[i] / dz[i];
          if (beta > 0.0 && beta < 1.0) cuts.push_back(beta);
        }
      }
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        double mid = 0.5 * (cuts[c] + cuts[c + 1]);
        Line piece;
        for (std::size_t i = 0; i < d; ++i) {
          int sg = sign_of(z0[i] + mid * dz[i]);
          piece.slope += sg * dz[i];
          piece.intercept += sg * z0[i];
        }
        prof.lines.push_back(piece);
      }
      break;
    }
    case MetricKind::LInfinity: {
      for (std::size_t i = 0; i < d; ++i) {
        prof.lines.push_back({dz[i], z0[i]});
        prof.lines.push_back({-dz[i], -z0[i]});
      }
      break;
    }
    case MetricKind::Polytope: {
      if (normals_.front().size() != d) {
        throw DimensionMismatch("points do not match facet normal dimension");
      }
      for (const Point& w : normals_) {
        prof.lines.push_back({dot(w, dz), dot(w, z0)});
      }
      break;
    }
    case MetricKind::RegularPolygon2D: {
      double len = euclidean_norm(dz);
      if (len == 0.0) {
        prof.lines.push_back({0.0, (*this)(p, a)});
        break;
      }
      // Work in the plane spanned by the segment direction and the offset
      // of z0 from it: z(l) = (x0 + l*len) * u + y * w with w ⊥ u, y >= 0.
      // The polygon gauge with one side parallel to u turns each polygon
      // side into one line in l.
      double x0 = dot(z0, dz) / len;
      double y2 = squared_norm(z0) - x0 * x0;
      double y = std::sqrt(std::max(y2, 0.0));
      for (std::size_t l = 0; l < cos_.size(); ++l) {
        prof.lines.push_back({cos_[l] * len, cos_[l] * x0 + sin_[l] * y});
      }
      break;
    }
  }

  prof.kind = BoundaryProfile::Kind::PiecewiseLinear;
  MinPoint mp = min_of_upper_envelope(prof.lines, 0.0, 1.0);
  prof.min_lambda = mp.lambda;
  prof.min_value = mp.value;
  return prof;
}

int polygon_sides_for_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be positive and finite");
  }
  double target = 1.0 / (1.0 + epsilon);
  int k = std::max(3, static_cast<int>(std::ceil(
                          std::numbers::pi / std::acos(target))));
  while (std::cos(std::numbers::pi / k) < target) ++k;
  return k;
}

}  // namespace leash
