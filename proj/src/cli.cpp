#include "leash/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>

#include <CLI11.hpp>

#include "leash/bench.hpp"
#include "leash/curve_io.hpp"
#include "leash/engine.hpp"
#include "leash/oracle.hpp"

namespace leash {

namespace {

std::string fmt_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

std::string fmt_fixed(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

long long parse_integer(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw ParseError("invalid " + what + ": " + text);
  }
  if (used != text.size()) {
    throw ParseError("invalid " + what + ": " + text);
  }
  return value;
}

Metric parse_metric(const std::string& spec) {
  if (spec == "euclidean") return Metric::euclidean_squared();
  if (spec == "l1") return Metric::l1();
  if (spec == "linf") return Metric::l_infinity();
  if (spec.rfind("polygon:", 0) == 0) {
    long long sides = parse_integer(spec.substr(8), "polygon side count");
    if (sides < 3 || sides > 1000000) {
      throw ParseError("polygon side count out of range: " + spec);
    }
    return Metric::regular_polygon(static_cast<int>(sides));
  }
  if (spec.rfind("polytope:", 0) == 0) {
    std::string path = spec.substr(9);
    if (path.empty()) throw ParseError("polytope metric needs a file path");
    try {
      return Metric::polytope(load_facet_normals(path));
    } catch (const DimensionMismatch&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  throw ParseError(
      "unknown metric \"" + spec +
      "\" (expected euclidean, l1, linf, polygon:<k>, or polytope:<file>)");
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

struct CurvePair {
  PolygonalCurve a;
  PolygonalCurve b;
};

CurvePair load_pair(const std::string& path_a, const std::string& path_b) {
  PolygonalCurve a = load_curve(path_a);
  PolygonalCurve b = load_curve(path_b);
  if (a.dimension() != b.dimension()) {
    throw DimensionMismatch(path_a + " has dimension " +
                            std::to_string(a.dimension()) + " but " + path_b +
                            " has dimension " + std::to_string(b.dimension()));
  }
  return {std::move(a), std::move(b)};
}

int run_compute(const std::string& path_a, const std::string& path_b,
                const std::string& metric_spec, bool approx, double epsilon,
                std::ostream& out) {
  CurvePair curves = load_pair(path_a, path_b);
  if (approx) {
    if (metric_spec != "euclidean") {
      throw ParseError("--epsilon approximates the euclidean metric only");
    }
    FrechetResult res =
        frechet_distance_approx(curves.a, curves.b, epsilon);
    double slack = 1.0 / std::cos(std::numbers::pi / res.polygon_sides);
    out << "metric = polygon:" << res.polygon_sides << "\n";
    out << "approx_epsilon = " << fmt_sci(res.approx_epsilon) << "\n";
    out << "polygon_sides = " << res.polygon_sides << "\n";
    out << "value = " << fmt_sci(res.value) << "\n";
    out << "upper_bound = " << fmt_sci(res.value * slack) << "\n";
    return 0;
  }
  Metric metric = parse_metric(metric_spec);
  FrechetResult res = frechet_distance(curves.a, curves.b, metric);
  out << "metric = " << metric.name() << "\n";
  out << "value = " << fmt_sci(res.value) << "\n";
  return 0;
}

int run_verify(const std::string& path_a, const std::string& path_b,
               const std::string& metric_spec, double tolerance,
               std::ostream& out) {
  CurvePair curves = load_pair(path_a, path_b);
  Metric metric = parse_metric(metric_spec);
  FrechetResult res = frechet_distance(curves.a, curves.b, metric);
  double v = res.value;
  bool upper_ok =
      decide_frechet_at_most(curves.a, curves.b, metric, v * (1.0 + tolerance));
  // Below the oracle's padding resolution a lower probe is meaningless.
  bool check_lower = v * tolerance > 1e-12 * (1.0 + v);
  bool lower_ok = true;
  if (check_lower) {
    lower_ok = !decide_frechet_at_most(curves.a, curves.b, metric,
                                       v * (1.0 - tolerance));
  }
  out << "metric = " << metric.name() << "\n";
  out << "value = " << fmt_sci(v) << "\n";
  out << "check_upper = " << (upper_ok ? "pass" : "fail") << "\n";
  out << "check_lower = "
      << (check_lower ? (lower_ok ? "pass" : "fail") : "skipped") << "\n";
  bool ok = upper_ok && lower_ok;
  out << "verify = " << (ok ? "ok" : "gap") << "\n";
  return ok ? 0 : 1;
}

int run_terrain(const std::string& path_a, const std::string& path_b,
                const std::string& metric_spec, int resolution,
                std::ostream& out) {
  CurvePair curves = load_pair(path_a, path_b);
  Metric metric = parse_metric(metric_spec);
  out << "metric = " << metric.name() << "\n";
  out << "rows = " << resolution << "\n";
  out << "cols = " << resolution << "\n";
  double smax = static_cast<double>(curves.a.segment_count());
  double tmax = static_cast<double>(curves.b.segment_count());
  for (int r = 0; r < resolution; ++r) {
    double t = tmax * r / (resolution - 1);
    Point qt = curves.b.eval(t);
    for (int c = 0; c < resolution; ++c) {
      double s = smax * c / (resolution - 1);
      if (c) out << ',';
      out << fmt_sci(metric.report(metric(curves.a.eval(s), qt)));
    }
    out << "\n";
  }
  return 0;
}

int run_bench_cmd(std::uint64_t seed, const std::string& sizes_csv,
                  const std::string& metrics_csv, std::ostream& out) {
  std::vector<std::size_t> sizes;
  for (const std::string& part : split_csv(sizes_csv)) {
    long long n = parse_integer(part, "size");
    if (n < 1 || n > 100000) throw ParseError("size out of range: " + part);
    sizes.push_back(static_cast<std::size_t>(n));
  }
  std::vector<Metric> metrics;
  for (const std::string& part : split_csv(metrics_csv)) {
    metrics.push_back(parse_metric(part));
  }
  if (sizes.empty() || metrics.empty()) {
    throw ParseError("bench needs at least one size and one metric");
  }
  std::vector<BenchRow> rows = run_bench(seed, sizes, metrics);
  for (const BenchRow& row : rows) {
    out << "bench metric=" << row.metric << " segments=" << row.segments
        << " ms=" << fmt_fixed(row.millis)
        << " envelope_ops=" << row.envelope_ops
        << " value=" << fmt_sci(row.value) << "\n";
  }
  for (const Metric& metric : metrics) {
    if (sizes.size() >= 2) {
      out << "exponent metric=" << metric.name()
          << " value=" << fmt_fixed(fitted_exponent(rows, metric.name()))
          << "\n";
    }
  }
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Frechet distance between polygonal curves"};
  app.require_subcommand(1);

  std::string curve_a;
  std::string curve_b;
  std::string metric_spec = "euclidean";
  double epsilon = 0.0;
  double tolerance = 1e-6;
  int resolution = 64;
  std::uint64_t seed = 1;
  std::string sizes_csv = "64,128,256,512";
  std::string metrics_csv = "l1,linf";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-a,--curve-a", curve_a, "First curve file")->required();
    cmd->add_option("-b,--curve-b", curve_b, "Second curve file")->required();
    cmd->add_option(
        "-m,--metric", metric_spec,
        "euclidean | l1 | linf | polygon:<k> | polytope:<file>");
  };

  CLI::App* compute =
      app.add_subcommand("compute", "Compute the Frechet distance");
  add_common(compute);
  compute->add_option(
      "-e,--epsilon", epsilon,
      "Return a (1+epsilon)-approximation of the euclidean distance");

  CLI::App* verify = app.add_subcommand(
      "verify", "Cross-check the sweep against the decision oracle");
  add_common(verify);
  verify->add_option("-t,--tolerance", tolerance,
                     "Relative width of the cross-check probes");

  CLI::App* terrain = app.add_subcommand(
      "terrain", "Sample the pointwise distance on a parameter grid");
  add_common(terrain);
  terrain->add_option("-r,--resolution", resolution, "Samples per axis")
      ->check(CLI::Range(2, 8192));

  CLI::App* bench =
      app.add_subcommand("bench", "Time the sweep on random-walk curves");
  bench->add_option("--seed", seed, "Random seed");
  bench->add_option("--sizes", sizes_csv, "Comma-separated segment counts");
  bench->add_option("--metrics", metrics_csv, "Comma-separated metrics");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) {
      return run_compute(curve_a, curve_b, metric_spec,
                         compute->count("--epsilon") > 0, epsilon, out);
    }
    if (verify->parsed()) {
      return run_verify(curve_a, curve_b, metric_spec, tolerance, out);
    }
    if (terrain->parsed()) {
      return run_terrain(curve_a, curve_b, metric_spec, resolution, out);
    }
    if (bench->parsed()) {
      return run_bench_cmd(seed, sizes_csv, metrics_csv, out);
    }
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}

}  // namespace leash
