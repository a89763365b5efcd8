#pragma once

#include <optional>

#include "leash/geometry.hpp"

namespace leash {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// The set {lambda in [0, 1] : profile(lambda) <= bound} in native units.
// The profile is convex, so the set is one interval; it is padded by 1e-12
// on each side to keep threshold decisions stable.
std::optional<Interval> feasible_interval(const BoundaryProfile& profile,
                                          double bound);

// Decision oracle: is the Frechet distance under `metric` at most `bound`
// (reported units)?  Implemented independently of the sweep engine by
// propagating reachable intervals across cell boundaries in one row-major
// pass.  Within a cell the distance is convex, so free regions on the
// boundaries are intervals and monotone reachability only constrains the
// lower endpoint along the shared axis.
bool decide_frechet_at_most(const PolygonalCurve& P, const PolygonalCurve& Q,
                            const Metric& metric, double bound);

// Frechet distance (reported units) obtained by bisecting the decision
// oracle between certified bounds until the bracket's relative width drops
// below rel_tol; returns the bracket midpoint.
double frechet_by_bisection(const PolygonalCurve& P, const PolygonalCurve& Q,
                            const Metric& metric, double rel_tol = 1e-9,
                            int max_iter = 200);

// Discrete Frechet distance (reported units) over the curve vertices with
// `refinement - 1` extra points interpolated into every segment.  Always
// an upper bound on the continuous distance; converges to it as the
// refinement grows.
double discrete_frechet(const PolygonalCurve& P, const PolygonalCurve& Q,
                        const Metric& metric, int refinement = 1);

// Shrink a bracket [lo, hi] certified to contain the distance (reported
// units) to absolute width 2 * eps_rel * lo by bisecting the decision
// oracle; returns the bracket midpoint.  Throws std::logic_error if the
// oracle rejects hi.
double refine_with_decision(const PolygonalCurve& P, const PolygonalCurve& Q,
                            const Metric& metric, double lo, double hi,
                            double eps_rel);

}  // namespace leash
