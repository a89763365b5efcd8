#include "leash/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace leash {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Envelope for squared-Euclidean boundary profiles.  All profiles in one
// lane share the quadratic coefficient bit-for-bit, so subtracting the
// common quadratic term leaves an upper envelope of lines.  Profiles are
// stored untruncated; min_query deletes an entry when the minimum falls on
// a crossing whose increasing side is an older profile (the older
// profile's increasing part never determines a sound result, because the
// sweep's floors already account for what it witnessed).
class ParabolaEnvelope final : public WitnessEnvelope {
 public:
  explicit ParabolaEnvelope(SweepStats* stats) : WitnessEnvelope(stats) {}

  void insert(EnvelopeEntry entry) override {
    if (entry.profile.kind != BoundaryProfile::Kind::Parabola) {
      throw std::logic_error("parabola envelope requires parabola profiles");
    }
    if (live_.empty()) {
      quad_ = entry.profile.quad;
    } else if (entry.profile.quad != quad_) {
      throw std::logic_error(
          "parabola envelope requires one shared quadratic coefficient");
    }
    count_insert();
    live_.push_back(std::move(entry));
    dirty_ = true;
  }

  void remove_up_to(int cutoff) override {
    std::size_t n = 0;
    while (!live_.empty() && live_.front().column <= cutoff) {
      live_.pop_front();
      ++n;
    }
    if (n > 0) {
      count_removals(n);
      dirty_ = true;
    }
  }

  void clear() override {
    count_removals(live_.size());
    live_.clear();
    hull_.clear();
    left_.clear();
    dirty_ = false;
  }

  MinPoint min_query(std::optional<double> crossed_floor,
                     double entry_floor) override {
    count_query();
    last_removed_.clear();
    double floor = entry_floor;
    if (crossed_floor) floor = std::max(floor, *crossed_floor);
    if (live_.empty()) return {0.0, floor};

    for (;;) {
      if (dirty_) rebuild();
      // The envelope is convex; locate the piece holding the unconstrained
      // minimum.  vertex(m) decreases with m while the pieces' left edges
      // increase, so "vertex(m) >= left_[m]" flips true -> false once.
      std::size_t lo = 0;
      std::size_t hi = hull_.size() - 1;
      while (lo < hi) {
        std::size_t mid = (lo + hi + 1) / 2;
        if (vertex(mid) >= left_[mid]) {
          lo = mid;
        } else {
          hi = mid - 1;
        }
      }
      std::size_t m = lo;
      double v = vertex(m);
      double right = m + 1 < hull_.size() ? left_[m + 1] : kInf;
      if (v <= right) {
        // Minimum interior to piece m (or beyond [0, 1]: clamp, since the
        // envelope is convex).
        double x = std::clamp(v, 0.0, 1.0);
        return {x, std::max(eval_hull(x), floor)};
      }
      // Minimum at the crossing between a decreasing piece (m) and an
      // increasing one (m + 1).
      double x = left_[m + 1];
      if (x < 0.0) return {0.0, std::max(eval_hull(0.0), floor)};
      if (x > 1.0) return {1.0, std::max(eval_hull(1.0), floor)};
      if (hull_[m + 1].column < hull_[m].column) {
        delete_column(hull_[m + 1].column);
        continue;
      }
      return {x, std::max(eval_hull(x), floor)};
    }
  }

  double value_at(double lambda) const override {
    double v = -kInf;
    for (const EnvelopeEntry& e : live_) v = std::max(v, e.profile(lambda));
    return v;
  }

 private:
  struct HullLine {
    double slope = 0.0;
    double intercept = 0.0;
    int column = 0;
    double at(double x) const { return slope * x + intercept; }
  };

  static double crossing(const HullLine& a, const HullLine& b) {
    return (a.intercept - b.intercept) / (b.slope - a.slope);
  }

  double vertex(std::size_t m) const {
    if (quad_ > 0.0) return -hull_[m].slope / (2.0 * quad_);
    if (hull_[m].slope < 0.0) return kInf;
    if (hull_[m].slope > 0.0) return -kInf;
    return left_[m];
  }

  double eval_hull(double x) const {
    std::size_t lo = 0;
    std::size_t hi = hull_.size() - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi + 1) / 2;
      if (left_[mid] <= x) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    return quad_ * x * x + hull_[lo].at(x);
  }

  void delete_column(int column) {
    auto it = std::find_if(live_.begin(), live_.end(),
                           [column](const EnvelopeEntry& e) {
                             return e.column == column;
                           });
    last_removed_.push_back(std::move(*it));
    live_.erase(it);
    count_removals(1);
    dirty_ = true;
  }

  void rebuild() {
    hull_.clear();
    left_.clear();
    std::vector<HullLine> ls;
    ls.reserve(live_.size());
    for (const EnvelopeEntry& e : live_) {
      ls.push_back({e.profile.lin, e.profile.offset, e.column});
    }
    std::sort(ls.begin(), ls.end(), [](const HullLine& a, const HullLine& b) {
      if (a.slope != b.slope) return a.slope < b.slope;
      if (a.intercept != b.intercept) return a.intercept < b.intercept;
      return a.column < b.column;
    });
    std::vector<HullLine> dedup;
    for (const HullLine& l : ls) {
      if (!dedup.empty() && dedup.back().slope == l.slope) dedup.pop_back();
      dedup.push_back(l);
    }
    for (const HullLine& l : dedup) {
      while (hull_.size() >= 2) {
        const HullLine& a = hull_[hull_.size() - 2];
        const HullLine& b = hull_.back();
        double x_al = crossing(a, l);
        if (b.at(x_al) <= a.at(x_al)) {
          hull_.pop_back();
          left_.pop_back();
        } else {
          break;
        }
      }
      if (hull_.empty()) {
        left_.push_back(-kInf);
      } else {
        left_.push_back(crossing(hull_.back(), l));
      }
      hull_.push_back(l);
    }
    dirty_ = false;
  }

  double quad_ = 0.0;
  bool dirty_ = false;
  std::vector<HullLine> hull_;
  std::vector<double> left_;
};

// Envelope for piecewise-linear boundary profiles (L1, L-infinity,
// polytope, per-segment polygon).  Older profiles are stored already
// truncated: a truncated convex piecewise-linear profile equals the
// maximum of its non-positive-slope lines and its constant minimum.  The
// slopes in one lane come from a fixed small set, so non-positive-slope
// lines live in per-slope deques under the sliding-window-maximum
// discipline, the constant minima in one more such deque, and only the
// frontier's increasing lines are kept (they are discarded wholesale when
// the next frontier arrives).
class FacetEnvelope final : public WitnessEnvelope {
 public:
  explicit FacetEnvelope(SweepStats* stats) : WitnessEnvelope(stats) {}

  void insert(EnvelopeEntry entry) override {
    if (entry.profile.kind != BoundaryProfile::Kind::PiecewiseLinear) {
      throw std::logic_error(
          "piecewise-linear envelope requires piecewise-linear profiles");
    }
    count_insert();
    frontier_rising_.clear();
    for (const Line& l : entry.profile.lines) {
      if (l.slope <= 0.0) {
        auto& dq = buckets_[l.slope];
        while (!dq.empty() && dq.back().intercept <= l.intercept) {
          dq.pop_back();
        }
        dq.push_back({entry.column, l.intercept});
      } else {
        frontier_rising_.push_back(l);
      }
    }
    while (!floor_mins_.empty() &&
           floor_mins_.back().intercept <= entry.profile.min_value) {
      floor_mins_.pop_back();
    }
    floor_mins_.push_back({entry.column, entry.profile.min_value});
    live_.push_back(std::move(entry));
  }

  void remove_up_to(int cutoff) override {
    std::size_t n = 0;
    while (!live_.empty() && live_.front().column <= cutoff) {
      live_.pop_front();
      ++n;
    }
    count_removals(n);
    for (auto it = buckets_.begin(); it != buckets_.end();) {
      auto& dq = it->second;
      while (!dq.empty() && dq.front().column <= cutoff) dq.pop_front();
      it = dq.empty() ? buckets_.erase(it) : std::next(it);
    }
    while (!floor_mins_.empty() && floor_mins_.front().column <= cutoff) {
      floor_mins_.pop_front();
    }
  }

  void clear() override {
    count_removals(live_.size());
    live_.clear();
    buckets_.clear();
    frontier_rising_.clear();
    floor_mins_.clear();
  }

  MinPoint min_query(std::optional<double> crossed_floor,
                     double entry_floor) override {
    count_query();
    last_removed_.clear();
    double floor = entry_floor;
    if (crossed_floor) floor = std::max(floor, *crossed_floor);
    if (live_.empty()) return {0.0, floor};

    std::vector<Line> lines;
    lines.reserve(buckets_.size() + frontier_rising_.size() + 1);
    for (const auto& [slope, dq] : buckets_) {
      lines.push_back({slope, dq.front().intercept});
    }
    lines.insert(lines.end(), frontier_rising_.begin(),
                 frontier_rising_.end());
    lines.push_back({0.0, floor_mins_.front().intercept});
    MinPoint mp = min_of_upper_envelope(lines, 0.0, 1.0);
    return {mp.lambda, std::max(mp.value, floor)};
  }

  double value_at(double lambda) const override {
    double v = -kInf;
    for (const EnvelopeEntry& e : live_) {
      bool frontier = e.column == live_.back().column;
      v = std::max(v, frontier ? e.profile(lambda)
                               : e.profile.truncated(lambda));
    }
    return v;
  }

 private:
  struct Item {
    int column = 0;
    double intercept = 0.0;
  };

  std::map<double, std::deque<Item>> buckets_;  // slope -> window maxima
  std::vector<Line> frontier_rising_;
  std::deque<Item> floor_mins_;
};

}  // namespace

std::unique_ptr<WitnessEnvelope> make_envelope(MetricKind kind,
                                               SweepStats* stats) {
  if (kind == MetricKind::EuclideanSquared) {
    return std::make_unique<ParabolaEnvelope>(stats);
  }
  return std::make_unique<FacetEnvelope>(stats);
}

}  // namespace leash
