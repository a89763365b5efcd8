#include "leash/bench.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace leash {

namespace {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// Uniform double in [0, 1) with reproducible bit-level behavior.
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

PolygonalCurve random_walk_curve(std::uint64_t seed, std::size_t segments,
                                 std::size_t dim) {
  if (segments == 0 || dim == 0) {
    throw std::invalid_argument("random walk needs segments >= 1, dim >= 1");
  }
  std::mt19937_64 rng(seed);
  std::vector<Point> vertices;
  vertices.reserve(segments + 1);
  Point p(dim, 0.0);
  vertices.push_back(p);
  for (std::size_t s = 0; s < segments; ++s) {
    for (std::size_t k = 0; k < dim; ++k) {
      p[k] += 2.0 * unit_double(rng) - 1.0;
    }
    vertices.push_back(p);
  }
  return PolygonalCurve(std::move(vertices));
}

std::vector<BenchRow> run_bench(std::uint64_t seed,
                                const std::vector<std::size_t>& sizes,
                                const std::vector<Metric>& metrics) {
  using clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  for (const Metric& metric : metrics) {
    for (std::size_t n : sizes) {
      PolygonalCurve P =
          random_walk_curve(mix_seed(seed, 2 * n), n, 2);
      PolygonalCurve Q =
          random_walk_curve(mix_seed(seed, 2 * n + 1), n, 2);
      BenchRow row;
      row.metric = metric.name();
      row.segments = n;
      double best = std::numeric_limits<double>::infinity();
      double total = 0.0;
      std::size_t reps = 0;
      while (total < 0.05 || reps < 5) {
        auto t0 = clock::now();
        FrechetResult res = frechet_distance(P, Q, metric);
        auto t1 = clock::now();
        double dt = std::chrono::duration<double>(t1 - t0).count();
        best = std::min(best, dt);
        total += dt;
        ++reps;
        row.envelope_ops =
            res.stats.envelope_inserts + res.stats.envelope_removals;
        row.value = res.value;
      }
      row.millis = best * 1e3;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

double fitted_exponent(const std::vector<BenchRow>& rows,
                       const std::string& metric) {
  const BenchRow* small = nullptr;
  const BenchRow* large = nullptr;
  for (const BenchRow& row : rows) {
    if (row.metric != metric) continue;
    if (!small || row.segments < small->segments) small = &row;
    if (!large || row.segments > large->segments) large = &row;
  }
  if (!small || !large || small->segments == large->segments) {
    throw std::invalid_argument("need two sizes for metric " + metric);
  }
  return std::log(large->millis / small->millis) /
         std::log(static_cast<double>(large->segments) /
                  static_cast<double>(small->segments));
}

}  // namespace leash
