#include "leash/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace leash {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPad = 1e-12;

std::optional<Interval> clip_unit(double lo, double hi) {
  lo = std::max(lo - kPad, 0.0);
  hi = std::min(hi + kPad, 1.0);
  if (lo > hi) return std::nullopt;
  return Interval{lo, hi};
}

// Native distance check for the two curve endpoints shared by engine and
// oracle semantics.
double native_bound(const Metric& metric, double bound) {
  return metric.reports_squared() ? bound * bound : bound;
}

}  // namespace

std::optional<Interval> feasible_interval(const BoundaryProfile& profile,
                                          double bound) {
  if (profile.kind == BoundaryProfile::Kind::Parabola) {
    if (profile.quad == 0.0) {
      if (profile.lin == 0.0) {
        if (profile.offset <= bound) return clip_unit(0.0, 1.0);
        return std::nullopt;
      }
      double x = (bound - profile.offset) / profile.lin;
      if (profile.lin > 0.0) return clip_unit(-kInf, x);
      return clip_unit(x, kInf);
    }
    double disc =
        profile.lin * profile.lin - 4.0 * profile.quad * (profile.offset - bound);
    if (disc < 0.0) return std::nullopt;
    double sq = std::sqrt(disc);
    double lo = (-profile.lin - sq) / (2.0 * profile.quad);
    double hi = (-profile.lin + sq) / (2.0 * profile.quad);
    return clip_unit(lo, hi);
  }

  double lo = kInf;
  double hi = -kInf;
  for (const EnvelopePiece& piece :
       upper_envelope_pieces(profile.lines, 0.0, 1.0)) {
    double xl = piece.lo;
    double xr = piece.hi;
    const Line& l = piece.line;
    if (l.slope == 0.0) {
      if (l.intercept > bound) continue;
    } else {
      double x = (bound - l.intercept) / l.slope;
      if (l.slope > 0.0) {
        xr = std::min(xr, x);
      } else {
        xl = std::max(xl, x);
      }
    }
    if (xl > xr) continue;
    lo = std::min(lo, xl);
    hi = std::max(hi, xr);
  }
  if (lo > hi) return std::nullopt;
  return clip_unit(lo, hi);
}

bool decide_frechet_at_most(const PolygonalCurve& P, const PolygonalCurve& Q,
                            const Metric& metric, double bound) {
  if (P.dimension() != Q.dimension()) {
    throw DimensionMismatch("curves have dimensions " +
                            std::to_string(P.dimension()) + " and " +
                            std::to_string(Q.dimension()));
  }
  if (!(bound >= 0.0)) return false;
  const double eps = native_bound(metric, bound);
  const std::size_t cols = P.segment_count();
  const std::size_t rows = Q.segment_count();

  if (metric(P.vertex(0), Q.vertex(0)) > eps) return false;
  if (metric(P.vertex(cols), Q.vertex(rows)) > eps) return false;

  // reach_bottom[i]: reachable sub-interval of the bottom boundary of cell
  // (i, j); reach_left: same for the left boundary of the current cell.
  // Paths enter the grid only at the start corner; travel along the outer
  // bottom/left edges is equivalent to hopping across boundary endpoints,
  // which the in-grid propagation already covers.
  std::vector<std::optional<Interval>> reach_bottom(cols);
  reach_bottom[0] = Interval{0.0, 0.0};
  std::optional<Interval> reach_left;

  for (std::size_t j = 0; j < rows; ++j) {
    reach_left = j == 0 ? std::optional<Interval>(Interval{0.0, 0.0})
                        : std::nullopt;
    for (std::size_t i = 0; i < cols; ++i) {
      std::optional<Interval> free_right = feasible_interval(
          metric.boundary_profile(P.vertex(i + 1), Q.vertex(j),
                                  Q.vertex(j + 1)),
          eps);
      std::optional<Interval> free_top = feasible_interval(
          metric.boundary_profile(Q.vertex(j + 1), P.vertex(i),
                                  P.vertex(i + 1)),
          eps);

      // From the bottom boundary every right-boundary point is monotone;
      // from the left boundary the exit cannot drop below the entry.
      std::optional<Interval> next_left;
      if (free_right) {
        if (reach_bottom[i]) {
          next_left = free_right;
        } else if (reach_left) {
          double lo = std::max(free_right->lo, reach_left->lo);
          if (lo <= free_right->hi) next_left = Interval{lo, free_right->hi};
        }
      }
      std::optional<Interval> next_bottom;
      if (free_top) {
        if (reach_left) {
          next_bottom = free_top;
        } else if (reach_bottom[i]) {
          double lo = std::max(free_top->lo, reach_bottom[i]->lo);
          if (lo <= free_top->hi) next_bottom = Interval{lo, free_top->hi};
        }
      }
      reach_left = next_left;
      reach_bottom[i] = next_bottom;
    }
  }
  return reach_left.has_value() || reach_bottom[cols - 1].has_value();
}

double frechet_by_bisection(const PolygonalCurve& P, const PolygonalCurve& Q,
                            const Metric& metric, double rel_tol,
                            int max_iter) {
  double lo = std::max(metric.report(metric(P.vertex(0), Q.vertex(0))),
                       metric.report(metric(P.vertex(P.segment_count()),
                                            Q.vertex(Q.segment_count()))));
  double hi = lo;
  for (const Point& p : P.vertices()) {
    for (const Point& q : Q.vertices()) {
      hi = std::max(hi, metric.report(metric(p, q)));
      hi = std::max(hi, euclidean_norm(subtract(p, q)));
    }
  }
  if (decide_frechet_at_most(P, Q, metric, lo)) return lo;
  for (int iter = 0;
       iter < max_iter && hi - lo > rel_tol * std::max(hi, 1e-300); ++iter) {
    double mid = 0.5 * (lo + hi);
    if (decide_frechet_at_most(P, Q, metric, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double discrete_frechet(const PolygonalCurve& P, const PolygonalCurve& Q,
                        const Metric& metric, int refinement) {
  if (refinement < 1) {
    throw std::invalid_argument("refinement must be at least 1");
  }
  auto sample = [refinement](const PolygonalCurve& c) {
    std::vector<Point> pts;
    pts.reserve(c.segment_count() * refinement + 1);
    for (std::size_t s = 0; s < c.segment_count(); ++s) {
      for (int k = 0; k < refinement; ++k) {
        pts.push_back(c.eval(static_cast<double>(s) +
                             static_cast<double>(k) / refinement));
      }
    }
    pts.push_back(c.vertex(c.segment_count()));
    return pts;
  };
  std::vector<Point> ps = sample(P);
  std::vector<Point> qs = sample(Q);

  std::vector<double> prev(qs.size()), cur(qs.size());
  for (std::size_t k = 0; k < qs.size(); ++k) {
    double d = metric(ps[0], qs[k]);
    cur[k] = k == 0 ? d : std::max(cur[k - 1], d);
  }
  for (std::size_t i = 1; i < ps.size(); ++i) {
    std::swap(prev, cur);
    for (std::size_t k = 0; k < qs.size(); ++k) {
      double best = prev[k];
      if (k > 0) best = std::min({best, cur[k - 1], prev[k - 1]});
      cur[k] = std::max(best, metric(ps[i], qs[k]));
    }
  }
  return metric.report(cur.back());
}

double refine_with_decision(const PolygonalCurve& P, const PolygonalCurve& Q,
                            const Metric& metric, double lo, double hi,
                            double eps_rel) {
  if (!(lo >= 0.0) || !(lo <= hi)) {
    throw std::invalid_argument("refine_with_decision needs 0 <= lo <= hi");
  }
  if (!decide_frechet_at_most(P, Q, metric, hi * (1.0 + 1e-9) + 1e-300)) {
    throw std::logic_error("upper bound rejected by the decision oracle");
  }
  const double target = 2.0 * eps_rel * std::max(lo, 1e-300);
  for (int iter = 0; iter < 200 && hi - lo > target; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (decide_frechet_at_most(P, Q, metric, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace leash
