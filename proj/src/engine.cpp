#include "leash/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace leash {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Lane {
  std::deque<DequeEntry> deque;
  std::unique_ptr<WitnessEnvelope> envelope;
};

// One sweep step along a lane: admit the new candidate entry boundary,
// extend the window by the frontier profile, and compute the minimal leash
// value needed to reach the frontier boundary.
double advance(Lane& lane, int cand_index, double cand_value,
               int frontier_index, BoundaryProfile frontier_profile,
               double prev_boundary, bool row_lane, int lane_id,
               const FrechetOptions& opts, SweepStats& stats) {
  std::deque<DequeEntry>& dq = lane.deque;
  while (!dq.empty() && dq.back().value >= cand_value) {
    dq.pop_back();
    ++stats.deque_pops;
  }
  dq.push_back({cand_index, cand_value});
  // A sole candidate enters from below the current cell; no older boundary
  // profile can constrain it.
  if (dq.size() == 1) lane.envelope->clear();
  lane.envelope->insert({frontier_index, std::move(frontier_profile)});

  for (;;) {
    // A path from any non-head candidate crosses the previous boundary of
    // the current cell, so its reach value is a valid floor then.
    std::optional<double> crossed;
    if (dq.size() >= 2 ||
        (opts.literal_left_floor && std::isfinite(prev_boundary))) {
      crossed = prev_boundary;
    }
    MinPoint mp = lane.envelope->min_query(crossed, dq.front().value);
    if (opts.observer) {
      QueryEvent ev;
      ev.row_lane = row_lane;
      ev.lane = lane_id;
      ev.frontier = frontier_index;
      ev.crossed_floor = crossed;
      ev.entry_floor = dq.front().value;
      ev.result = mp.value;
      ev.result_lambda = mp.lambda;
      ev.envelope = lane.envelope.get();
      ev.deque_state = &dq;
      opts.observer->on_query(ev);
    }
    // Retract: if entering at the runner-up candidate costs no more than
    // the current best exit value, the head can never win again.
    if (dq.size() >= 2 && dq[1].value <= mp.value) {
      dq.pop_front();
      ++stats.deque_pops;
      lane.envelope->remove_up_to(dq.front().index);
      continue;
    }
    return mp.value;
  }
}

}  // namespace

FrechetResult frechet_distance(const PolygonalCurve& P,
                               const PolygonalCurve& Q, const Metric& metric,
                               const FrechetOptions& options) {
  if (P.dimension() != Q.dimension()) {
    throw DimensionMismatch("curves have dimensions " +
                            std::to_string(P.dimension()) + " and " +
                            std::to_string(Q.dimension()));
  }
  const std::size_t cols = P.segment_count();
  const std::size_t rows = Q.segment_count();

  FrechetResult res;
  res.kind = metric.kind();
  SweepStats& stats = res.stats;

  const double d00 = metric(P.vertex(0), Q.vertex(0));
  const double dend = metric(P.vertex(cols), Q.vertex(rows));

  // Rolling boundary values: Lstar[i] is the reach value of the left
  // boundary of cell (i, j) for the current row j; Bstar[i] is the reach
  // value of the bottom boundary most recently computed in column i.
  std::vector<double> Lstar(cols + 1, kInf);
  std::vector<double> Bstar(cols, kInf);
  Bstar[0] = d00;

  Lane row_lane;
  std::vector<Lane> col_lanes(cols);
  for (Lane& lane : col_lanes) {
    lane.envelope = make_envelope(metric.kind(), &stats);
  }

  for (std::size_t j = 0; j < rows; ++j) {
    Lstar[0] = j == 0 ? d00 : kInf;
    row_lane.deque.clear();
    row_lane.envelope = make_envelope(metric.kind(), &stats);
    for (std::size_t i = 0; i < cols; ++i) {
      ++stats.cells;
      // Reach value of L[i+1, j], the left boundary of the next cell in
      // this row, with candidates B[h, j], h <= i.
      BoundaryProfile left_prof = metric.boundary_profile(
          P.vertex(i + 1), Q.vertex(j), Q.vertex(j + 1));
      double next_left = advance(row_lane, static_cast<int>(i), Bstar[i],
                                 static_cast<int>(i + 1),
                                 std::move(left_prof), Lstar[i], true,
                                 static_cast<int>(j), options, stats);
      // Reach value of B[i, j+1], the bottom boundary of the next cell up
      // this column, with candidates L[i, g], g <= j.
      BoundaryProfile bottom_prof = metric.boundary_profile(
          Q.vertex(j + 1), P.vertex(i), P.vertex(i + 1));
      double next_bottom = advance(col_lanes[i], static_cast<int>(j),
                                   Lstar[i], static_cast<int>(j + 1),
                                   std::move(bottom_prof), Bstar[i], false,
                                   static_cast<int>(i), options, stats);
      Lstar[i + 1] = next_left;
      Bstar[i] = next_bottom;
    }
    stats.max_envelope_inserts = std::max(
        stats.max_envelope_inserts, row_lane.envelope->lifetime_inserts());
  }
  for (const Lane& lane : col_lanes) {
    stats.max_envelope_inserts = std::max(stats.max_envelope_inserts,
                                          lane.envelope->lifetime_inserts());
  }

  double native = std::max(dend, std::min(Lstar[cols], Bstar[cols - 1]));
  res.native_value = native;
  res.value = metric.report(native);
  return res;
}

FrechetResult frechet_distance_approx(const PolygonalCurve& P,
                                      const PolygonalCurve& Q, double epsilon,
                                      const FrechetOptions& options) {
  int sides = polygon_sides_for_epsilon(epsilon);
  Metric metric = Metric::regular_polygon(sides);
  FrechetResult res = frechet_distance(P, Q, metric, options);
  res.approx_epsilon = epsilon;
  res.polygon_sides = sides;
  return res;
}

}  // namespace leash
