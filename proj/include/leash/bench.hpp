#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "leash/engine.hpp"

namespace leash {

struct BenchRow {
  std::string metric;
  std::size_t segments = 0;
  double millis = 0.0;           // best single-run wall time
  std::size_t envelope_ops = 0;  // envelope inserts + removals
  double value = 0.0;            // computed distance (sanity output)
};

// Deterministic random-walk curve: `segments` unit-box steps in R^dim.
PolygonalCurve random_walk_curve(std::uint64_t seed, std::size_t segments,
                                 std::size_t dim);

// Time frechet_distance on random-walk curve pairs of each size under each
// metric.  Every measurement repeats until it accumulates at least 50 ms
// and 5 runs, keeping the fastest run.
std::vector<BenchRow> run_bench(std::uint64_t seed,
                                const std::vector<std::size_t>& sizes,
                                const std::vector<Metric>& metrics);

// Growth exponent for one metric from the smallest and largest sizes:
// log(t_large / t_small) / log(n_large / n_small).
double fitted_exponent(const std::vector<BenchRow>& rows,
                       const std::string& metric);

}  // namespace leash
