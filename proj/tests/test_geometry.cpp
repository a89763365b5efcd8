#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "leash/geometry.hpp"
#include "support.hpp"

using namespace leash;

TEST_CASE("vector helpers") {
  Point u{1.0, 2.0, 3.0};
  Point v{-1.0, 0.5, 2.0};
  CHECK(dot(u, v) == doctest::Approx(6.0));
  CHECK(subtract(u, v) == Point{2.0, 1.5, 1.0});
  CHECK(squared_norm(u) == doctest::Approx(14.0));
  CHECK(euclidean_norm(Point{3.0, 4.0}) == doctest::Approx(5.0));
  CHECK_THROWS_AS(dot(u, Point{1.0}), DimensionMismatch);
}

TEST_CASE("polygonal curve validation and evaluation") {
  PolygonalCurve c({{0.0, 0.0}, {2.0, 0.0}, {2.0, 2.0}});
  CHECK(c.dimension() == 2);
  CHECK(c.segment_count() == 2);
  CHECK(c.eval(0.5) == Point{1.0, 0.0});
  CHECK(c.eval(1.5) == Point{2.0, 1.0});
  CHECK(c.eval(-1.0) == Point{0.0, 0.0});
  CHECK(c.eval(5.0) == Point{2.0, 2.0});

  PolygonalCurve single({{1.0, 1.0}});
  CHECK(single.segment_count() == 1);
  CHECK(single.vertex(0) == single.vertex(1));

  CHECK_THROWS_AS(PolygonalCurve({}), std::invalid_argument);
  CHECK_THROWS_AS(PolygonalCurve({{1.0}, {1.0, 2.0}}), DimensionMismatch);
  CHECK_THROWS_AS(PolygonalCurve(std::vector<Point>{{std::nan("")}}),
                  std::invalid_argument);
}

TEST_CASE("upper envelope pieces and minimum") {
  std::vector<Line> lines{{-1.0, 1.0}, {1.0, -0.5}};
  auto pieces = upper_envelope_pieces(lines, 0.0, 1.0);
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0].line.slope == -1.0);
  CHECK(pieces[0].hi == doctest::Approx(0.75));
  CHECK(pieces[1].line.slope == 1.0);
  CHECK(pieces[1].lo == doctest::Approx(0.75));

  MinPoint mp = min_of_upper_envelope(lines, 0.0, 1.0);
  CHECK(mp.lambda == doctest::Approx(0.75));
  CHECK(mp.value == doctest::Approx(0.25));

  // Increasing envelope: minimum at the left end.
  mp = min_of_upper_envelope({{2.0, 0.0}, {0.5, 0.1}}, 0.0, 1.0);
  CHECK(mp.lambda == 0.0);
  CHECK(mp.value == doctest::Approx(0.1));

  // Decreasing envelope: minimum at the right end.
  mp = min_of_upper_envelope({{-2.0, 1.0}}, 0.0, 1.0);
  CHECK(mp.lambda == 1.0);
  CHECK(mp.value == doctest::Approx(-1.0));

  // Dominated lines do not change the result.
  mp = min_of_upper_envelope({{-1.0, 1.0}, {1.0, -0.5}, {0.0, -5.0}}, 0.0,
                             1.0);
  CHECK(mp.value == doctest::Approx(0.25));
}

TEST_CASE("squared euclidean boundary profile") {
  Metric m = Metric::euclidean_squared();
  BoundaryProfile prof =
      m.boundary_profile({0.0, 1.0}, {0.0, 0.0}, {2.0, 0.0});
  REQUIRE(prof.kind == BoundaryProfile::Kind::Parabola);
  CHECK(prof.quad == 4.0);
  CHECK(prof.lin == 0.0);
  CHECK(prof.offset == 1.0);
  CHECK(prof(0.0) == 1.0);
  CHECK(prof(1.0) == 5.0);
  CHECK(prof.min_lambda == 0.0);
  CHECK(prof.min_value == 1.0);
  CHECK(prof.truncated(0.7) == 1.0);

  // Zero-length segment: constant profile.
  BoundaryProfile flat =
      m.boundary_profile({0.0, 1.0}, {2.0, 0.0}, {2.0, 0.0});
  CHECK(flat.quad == 0.0);
  CHECK(flat.lin == 0.0);
  CHECK(flat(0.3) == doctest::Approx(5.0));
}

TEST_CASE("l1 boundary profile is the vee around the crossing") {
  Metric m = Metric::l1();
  BoundaryProfile prof =
      m.boundary_profile({1.0, 1.0}, {0.0, 0.0}, {2.0, 0.0});
  REQUIRE(prof.kind == BoundaryProfile::Kind::PiecewiseLinear);
  CHECK(prof(0.0) == doctest::Approx(2.0));
  CHECK(prof(0.5) == doctest::Approx(1.0));
  CHECK(prof(1.0) == doctest::Approx(2.0));
  CHECK(prof.min_lambda == doctest::Approx(0.5));
  CHECK(prof.min_value == doctest::Approx(1.0));
  CHECK(prof.truncated(0.25) == doctest::Approx(1.5));
  CHECK(prof.truncated(0.75) == doctest::Approx(1.0));
}

TEST_CASE("l-infinity boundary profile clamps at the offset") {
  Metric m = Metric::l_infinity();
  BoundaryProfile prof =
      m.boundary_profile({1.0, 1.0}, {0.0, 0.0}, {2.0, 0.0});
  CHECK(prof(0.0) == doctest::Approx(1.0));
  CHECK(prof(0.5) == doctest::Approx(1.0));
  CHECK(prof(1.0) == doctest::Approx(1.0));
  CHECK(prof.min_value == doctest::Approx(1.0));
}

TEST_CASE("profiles agree with pointwise metric along the segment") {
  test::Rng rng(20240817);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t dim = rng.chance(0.5) ? 2 : 3;
    std::vector<Metric> metrics{Metric::euclidean_squared(), Metric::l1(),
                                Metric::l_infinity(),
                                test::random_polytope_metric(rng, dim)};
    Point p = test::random_point(rng, dim);
    Point a = test::random_point(rng, dim);
    Point b = rng.chance(0.1) ? a : test::random_point(rng, dim);
    for (const Metric& metric : metrics) {
      BoundaryProfile prof = metric.boundary_profile(p, a, b);
      for (int g = 0; g <= 16; ++g) {
        double lam = g / 16.0;
        Point z(dim);
        for (std::size_t i = 0; i < dim; ++i) {
          z[i] = a[i] + lam * (b[i] - a[i]);
        }
        CHECK(prof(lam) == doctest::Approx(metric(z, p)).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("polytope metric reproduces l1 and l-infinity") {
  Metric l1m = Metric::l1();
  Metric linfm = Metric::l_infinity();
  Metric as_l1 = Metric::polytope(
      {{1.0, 1.0}, {1.0, -1.0}, {-1.0, 1.0}, {-1.0, -1.0}});
  Metric as_linf =
      Metric::polytope({{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}});
  test::Rng rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    Point p = test::random_point(rng, 2);
    Point q = test::random_point(rng, 2);
    CHECK(as_l1(p, q) == doctest::Approx(l1m(p, q)));
    CHECK(as_linf(p, q) == doctest::Approx(linfm(p, q)));
  }
}

TEST_CASE("polytope validation") {
  CHECK_THROWS_AS(Metric::polytope({{1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}}),
                  std::invalid_argument);  // not closed under negation
  CHECK_THROWS_AS(Metric::polytope({{1.0, 0.0}, {-1.0, 0.0}}),
                  std::invalid_argument);  // does not span
  CHECK_THROWS_AS(Metric::polytope({}), std::invalid_argument);
  CHECK_THROWS_AS(Metric::polytope({{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0},
                                    {0.0, -1.0}, {1.0, 1.0, 1.0}}),
                  DimensionMismatch);
}

TEST_CASE("regular polygon profile with four sides") {
  Metric m = Metric::regular_polygon(4);
  BoundaryProfile prof =
      m.boundary_profile({0.0, 1.0}, {0.0, 0.0}, {2.0, 0.0});
  CHECK(prof(0.0) == doctest::Approx(1.0));
  CHECK(prof(0.25) == doctest::Approx(1.0));
  CHECK(prof(0.5) == doctest::Approx(1.0));
  CHECK(prof(0.75) == doctest::Approx(1.5));
  CHECK(prof(1.0) == doctest::Approx(2.0));
  CHECK(prof.min_value == doctest::Approx(1.0));
}

TEST_CASE("regular polygon gauge is sandwiched around euclidean") {
  test::Rng rng(99);
  for (int sides : {3, 4, 5, 16, 23}) {
    Metric m = Metric::regular_polygon(sides);
    double cosk = std::cos(std::numbers::pi / sides);
    for (int iter = 0; iter < 50; ++iter) {
      std::size_t dim = rng.chance(0.5) ? 2 : 3;
      Point p = test::random_point(rng, dim);
      Point a = test::random_point(rng, dim);
      Point b = test::random_point(rng, dim);
      double pair = m(p, a);
      double eu = euclidean_norm(subtract(p, a));
      CHECK(pair <= eu * (1.0 + 1e-12));
      CHECK(pair >= eu * cosk * (1.0 - 1e-12));
      BoundaryProfile prof = m.boundary_profile(p, a, b);
      for (int g = 0; g <= 8; ++g) {
        double lam = g / 8.0;
        Point z(dim);
        for (std::size_t i = 0; i < dim; ++i) {
          z[i] = a[i] + lam * (b[i] - a[i]);
        }
        double eud = euclidean_norm(subtract(z, p));
        CHECK(prof(lam) <= eud * (1.0 + 1e-12) + 1e-12);
        CHECK(prof(lam) >= eud * cosk * (1.0 - 1e-12) - 1e-12);
      }
    }
  }
}

TEST_CASE("polygon side counts for approximation quality") {
  CHECK(polygon_sides_for_epsilon(1.0) == 3);
  CHECK(polygon_sides_for_epsilon(0.5) == 4);
  CHECK(polygon_sides_for_epsilon(0.01) == 23);
  for (double eps : {1.0, 0.5, 0.1, 0.01, 0.001}) {
    int k = polygon_sides_for_epsilon(eps);
    CHECK(1.0 / std::cos(std::numbers::pi / k) <= 1.0 + eps);
    if (k > 3) {
      CHECK(1.0 / std::cos(std::numbers::pi / (k - 1)) > 1.0 + eps);
    }
  }
  CHECK_THROWS_AS(polygon_sides_for_epsilon(0.0), std::invalid_argument);
}

TEST_CASE("metric axioms") {
  test::Rng rng(1234);
  for (int iter = 0; iter < 100; ++iter) {
    std::size_t dim = rng.chance(0.5) ? 2 : 3;
    std::vector<Metric> metrics{Metric::euclidean_squared(), Metric::l1(),
                                Metric::l_infinity(),
                                Metric::regular_polygon(7),
                                test::random_polytope_metric(rng, dim)};
    Point p = test::random_point(rng, dim);
    Point q = test::random_point(rng, dim);
    Point r = test::random_point(rng, dim);
    for (const Metric& m : metrics) {
      CHECK(m(p, p) == doctest::Approx(0.0));
      CHECK(m(p, q) == doctest::Approx(m(q, p)));
      double pr = m.report(m(p, r));
      double pq = m.report(m(p, q));
      double qr = m.report(m(q, r));
      CHECK(pr <= pq + qr + 1e-9);
    }
  }
}

TEST_CASE("reporting converts native to distance units") {
  CHECK(Metric::euclidean_squared().report(4.0) == doctest::Approx(2.0));
  CHECK(Metric::l1().report(4.0) == doctest::Approx(4.0));
  CHECK(Metric::euclidean_squared().reports_squared());
  CHECK_FALSE(Metric::l1().reports_squared());
}
