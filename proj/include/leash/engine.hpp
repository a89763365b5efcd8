#pragma once

#include <deque>
#include <optional>

#include "leash/envelope.hpp"
#include "leash/geometry.hpp"

namespace leash {

// Candidate entry boundary in a lane's deque: the boundary's index along
// the lane and the minimal leash value needed to reach it.
struct DequeEntry {
  int index = 0;
  double value = 0.0;
};

// Fired for every envelope query the sweep performs, including re-queries
// while the candidate deque head advances.  Pointers are valid only during
// the callback; the envelope is in its post-query state and
// envelope->last_query_removed() holds entries the query deleted.
struct QueryEvent {
  bool row_lane = true;  // true: computing a left boundary along a row,
                         // false: a bottom boundary up a column
  int lane = 0;          // row index (row lanes) or column index (column)
  int frontier = 0;      // index of the boundary just inserted
  std::optional<double> crossed_floor;
  double entry_floor = 0.0;
  double result = 0.0;
  double result_lambda = 0.0;
  const WitnessEnvelope* envelope = nullptr;
  const std::deque<DequeEntry>* deque_state = nullptr;
};

class SweepObserver {
 public:
  virtual ~SweepObserver() = default;
  virtual void on_query(const QueryEvent& event) = 0;
};

struct FrechetOptions {
  // Pass the previous boundary of the current cell as a query floor
  // whenever it is finite, even for single-candidate windows.  The default
  // passes it only when the candidate deque holds at least two entries: a
  // path entering the current cell from below need not cross that
  // boundary, so the unconditional floor can overestimate.  Exploratory
  // only; leave false for exact results.
  bool literal_left_floor = false;
  SweepObserver* observer = nullptr;
};

struct FrechetResult {
  double value = 0.0;         // reported units
  double native_value = 0.0;  // native units (squared for euclidean)
  MetricKind kind = MetricKind::EuclideanSquared;
  SweepStats stats;
  double approx_epsilon = 0.0;  // set by frechet_distance_approx
  int polygon_sides = 0;        // set by frechet_distance_approx
};

// Exact Frechet distance between two polygonal curves under `metric`,
// computed by a row-major sweep over the grid of segment pairs.  Each lane
// keeps a deque of candidate entry boundaries (reach values strictly
// increasing) and a witness envelope of the boundary profiles a path from
// the current best candidate still has to cross.
FrechetResult frechet_distance(const PolygonalCurve& P,
                               const PolygonalCurve& Q, const Metric& metric,
                               const FrechetOptions& options = {});

// (1 + epsilon)-approximation of the Euclidean Frechet distance using a
// regular-polygon metric with the minimal adequate number of sides.  The
// returned value v satisfies v <= F <= (1 + epsilon) * v.
FrechetResult frechet_distance_approx(const PolygonalCurve& P,
                                      const PolygonalCurve& Q, double epsilon,
                                      const FrechetOptions& options = {});

}  // namespace leash
