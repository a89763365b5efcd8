#pragma once

#include <cstddef>
#include <deque>
#include <memory>
#include <optional>
#include <vector>

#include "leash/geometry.hpp"

namespace leash {

// Operation counters for one distance computation.  Envelope counters are
// at the granularity of stored boundary profiles.
struct SweepStats {
  std::size_t envelope_inserts = 0;
  std::size_t envelope_removals = 0;
  std::size_t min_queries = 0;
  std::size_t deque_pops = 0;
  std::size_t max_envelope_inserts = 0;  // max profiles one envelope ever held
  std::size_t cells = 0;
};

// A boundary profile stored in a witness envelope, keyed by the index of
// the boundary along its lane.  Indices must be inserted in strictly
// increasing order.
struct EnvelopeEntry {
  int column = 0;
  BoundaryProfile profile;
};

// Upper envelope of the boundary profiles currently in the sweep window.
// The newest entry (the frontier) always contributes its full profile.
// Older entries conceptually contribute their running minimum from the
// left ("truncated" profiles): a monotone path that crossed an earlier
// boundary did so at a parameter no larger than where it crosses the
// frontier.
//
// The two implementations realize that contract differently:
//  - the piecewise-linear envelope stores older profiles already truncated,
//    so min_query needs no floors to be exact;
//  - the parabola envelope stores full parabolas (they all share one
//    quadratic coefficient per lane, so they reduce to lines) and instead
//    deletes entries during queries when their increasing part would
//    determine the minimum while a newer profile crosses below it.  Those
//    deletions are sound only together with the caller's floors, which the
//    sweep always supplies.
class WitnessEnvelope {
 public:
  virtual ~WitnessEnvelope() = default;

  virtual void insert(EnvelopeEntry entry) = 0;
  // Drop all entries with column <= cutoff (the window head advanced).
  virtual void remove_up_to(int cutoff) = 0;
  virtual void clear() = 0;

  // Minimum over lambda in [0, 1] of the envelope value, folded with the
  // floors: returned value = max(min over lambda, entry_floor,
  // crossed_floor if present).  May permanently delete entries whose
  // contribution is irrelevant for this and all later windows.
  virtual MinPoint min_query(std::optional<double> crossed_floor,
                             double entry_floor) = 0;

  // Envelope value at lambda under each implementation's storage contract
  // (full profiles for the parabola envelope, truncated-older for the
  // piecewise-linear one).
  virtual double value_at(double lambda) const = 0;

  const std::deque<EnvelopeEntry>& entries() const { return live_; }
  // Entries deleted by the most recent min_query.
  const std::vector<EnvelopeEntry>& last_query_removed() const {
    return last_removed_;
  }
  std::size_t lifetime_inserts() const { return lifetime_inserts_; }

 protected:
  explicit WitnessEnvelope(SweepStats* stats) : stats_(stats) {}

  void count_insert() {
    ++lifetime_inserts_;
    if (stats_) ++stats_->envelope_inserts;
  }
  void count_removals(std::size_t n) {
    if (stats_) stats_->envelope_removals += n;
  }
  void count_query() {
    if (stats_) ++stats_->min_queries;
  }

  std::deque<EnvelopeEntry> live_;
  std::vector<EnvelopeEntry> last_removed_;
  std::size_t lifetime_inserts_ = 0;
  SweepStats* stats_ = nullptr;
};

// Envelope implementation matching the boundary profiles of `kind`.
std::unique_ptr<WitnessEnvelope> make_envelope(MetricKind kind,
                                               SweepStats* stats);

}  // namespace leash
