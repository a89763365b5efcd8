#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "leash/envelope.hpp"
#include "leash/geometry.hpp"

namespace leash::test {

// Deterministic uniform helper; std::uniform_real_distribution is
// implementation-defined, so draw bits directly.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  int range(int lo, int hi) {
    return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(double p) { return unit() < p; }
};

inline Point random_point(Rng& rng, std::size_t dim, double lo = -10.0,
                          double hi = 10.0) {
  Point p(dim);
  for (double& x : p) x = rng.uniform(lo, hi);
  return p;
}

// Random curve with 1..max_segments segments; occasionally repeats a
// vertex so zero-length segments stay covered.
inline PolygonalCurve random_curve(Rng& rng, std::size_t dim,
                                   int max_segments = 12) {
  int segs = rng.range(1, max_segments);
  std::vector<Point> verts;
  verts.push_back(random_point(rng, dim));
  while (verts.size() < static_cast<std::size_t>(segs) + 1) {
    if (rng.chance(0.1)) {
      verts.push_back(verts.back());
    } else {
      verts.push_back(random_point(rng, dim));
    }
  }
  return PolygonalCurve(std::move(verts));
}

// Random symmetric spanning facet set: scaled axis directions plus a few
// arbitrary +/- pairs.
inline Metric random_polytope_metric(Rng& rng, std::size_t dim) {
  std::vector<Point> normals;
  for (std::size_t i = 0; i < dim; ++i) {
    Point e(dim, 0.0);
    e[i] = rng.uniform(0.4, 1.5);
    normals.push_back(e);
    Point ne(dim, 0.0);
    ne[i] = -e[i];
    normals.push_back(ne);
  }
  int extra = rng.range(1, 3);
  for (int k = 0; k < extra; ++k) {
    Point w = random_point(rng, dim, -1.0, 1.0);
    Point nw(dim);
    for (std::size_t i = 0; i < dim; ++i) nw[i] = -w[i];
    normals.push_back(std::move(w));
    normals.push_back(std::move(nw));
  }
  return Metric::polytope(std::move(normals));
}

inline bool within_rel(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b)) + 1e-12;
}

// Independent evaluation of a witness-envelope minimum by candidate
// enumeration: all breakpoints and pairwise intersections of the effective
// per-entry functions plus a safety grid.  With truncate_older, entries
// other than the one with the largest column contribute their running
// minimum from the left; otherwise all contribute their full profile.
inline double reference_envelope_min(const std::vector<EnvelopeEntry>& window,
                                     bool truncate_older,
                                     std::optional<double> crossed_floor,
                                     double entry_floor) {
  double floor = entry_floor;
  if (crossed_floor) floor = std::max(floor, *crossed_floor);
  if (window.empty()) return floor;

  int frontier_col = window.front().column;
  for (const EnvelopeEntry& e : window) {
    frontier_col = std::max(frontier_col, e.column);
  }
  auto effective = [&](const EnvelopeEntry& e, double x) {
    bool full = !truncate_older || e.column == frontier_col;
    return full ? e.profile(x) : e.profile.truncated(x);
  };
  auto value_at = [&](double x) {
    double v = -std::numeric_limits<double>::infinity();
    for (const EnvelopeEntry& e : window) v = std::max(v, effective(e, x));
    return v;
  };

  std::vector<double> cand{0.0, 1.0};
  auto push = [&cand](double x) {
    if (x >= 0.0 && x <= 1.0 && std::isfinite(x)) cand.push_back(x);
  };

  bool parabolic =
      window.front().profile.kind == BoundaryProfile::Kind::Parabola;
  if (parabolic) {
    for (const EnvelopeEntry& e : window) {
      push(e.profile.min_lambda);
      if (e.profile.quad > 0.0) {
        push(-e.profile.lin / (2.0 * e.profile.quad));
      }
    }
    for (std::size_t i = 0; i < window.size(); ++i) {
      const BoundaryProfile& a = window[i].profile;
      for (std::size_t j = i + 1; j < window.size(); ++j) {
        const BoundaryProfile& b = window[j].profile;
        // Shared quadratic coefficient: crossings are line crossings.
        if (a.lin != b.lin) push((b.offset - a.offset) / (a.lin - b.lin));
        // Crossings with the constant branch of a truncated profile.
        for (const BoundaryProfile* pair : {&a, &b}) {
          const BoundaryProfile& other = pair == &a ? b : a;
          double level = other.min_value;
          if (pair->quad > 0.0) {
            double disc = pair->lin * pair->lin -
                          4.0 * pair->quad * (pair->offset - level);
            if (disc >= 0.0) {
              double sq = std::sqrt(disc);
              push((-pair->lin - sq) / (2.0 * pair->quad));
              push((-pair->lin + sq) / (2.0 * pair->quad));
            }
          }
        }
      }
    }
  } else {
    std::vector<Line> lines;
    for (const EnvelopeEntry& e : window) {
      bool full = !truncate_older || e.column == frontier_col;
      for (const Line& l : e.profile.lines) {
        if (full || l.slope <= 0.0) lines.push_back(l);
      }
      if (!full) lines.push_back({0.0, e.profile.min_value});
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        if (lines[i].slope != lines[j].slope) {
          push((lines[j].intercept - lines[i].intercept) /
               (lines[i].slope - lines[j].slope));
        }
      }
    }
  }
  for (int g = 0; g <= 256; ++g) push(g / 256.0);

  double best = std::numeric_limits<double>::infinity();
  for (double x : cand) best = std::min(best, value_at(x));
  return std::max(best, floor);
}

}  // namespace leash::test
