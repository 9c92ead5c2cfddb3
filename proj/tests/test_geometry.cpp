#include <catch_amalgamated.hpp>

#include <cmath>
#include <cstring>

#include "support.hpp"
#include "trim/geometry.hpp"

using namespace trim;
using Catch::Approx;

TEST_CASE("reflect_halfspace flips the last coordinate") {
  CHECK(reflect_halfspace(Point{0.0, 3.0}) == Point{0.0, -3.0});
  CHECK(reflect_halfspace(Point{1.0, 0.0}) == Point{1.0, -0.0});
  CHECK(reflect_halfspace(Point{2.0, 5.0, -1.0}) == Point{2.0, 5.0, 1.0});
}

TEST_CASE("reflect_halfspace is a bitwise involution") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t dim = 2 + trial % 3;
    Point p = Point::zero(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = rng.uniform(-50.0, 50.0);
    Point back = reflect_halfspace(reflect_halfspace(p));
    for (std::size_t i = 0; i < dim; ++i) {
      CHECK(std::memcmp(&back[i], &p[i], sizeof(double)) == 0);
    }
  }
}

TEST_CASE("reflect_across_line basics") {
  Segment axis = Segment::line_through(Point{0.0, 0.0}, Point{1.0, 0.0});
  CHECK(dist(reflect_across_line(Point{0.0, 1.0}, axis), Point{0.0, -1.0}) == Approx(0.0).margin(1e-15));
  CHECK(dist(reflect_across_line(Point{3.0, 0.0}, axis), Point{3.0, 0.0}) == Approx(0.0).margin(1e-15));
  Segment diag = Segment::through(Point{0.0, 0.0}, Point{1.0, 1.0});
  CHECK(dist(reflect_across_line(Point{1.0, 1.0}, diag), Point{1.0, 1.0}) == Approx(0.0).margin(1e-15));
  CHECK(dist(reflect_across_line(Point{1.0, 0.0}, diag), Point{0.0, 1.0}) == Approx(0.0).margin(1e-15));
}

TEST_CASE("reflection preserves distance to the line") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Point a{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    Point d{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    if (norm(d) < 1e-3) continue;
    Segment line = Segment::line_through(a, d);
    Point p{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    Point q = reflect_across_line(p, line);
    CHECK(point_piece_distance(p, line) == Approx(point_piece_distance(q, line)).margin(1e-12));
    CHECK(dist(p, q) == Approx(2.0 * point_piece_distance(p, line)).margin(1e-12));
  }
}

TEST_CASE("angle_at examples") {
  Point o{0.0, 0.0};
  CHECK(angle_at(o, Point{1.0, 0.0}, Point{0.0, 1.0}) == Approx(M_PI / 2));
  CHECK(angle_at(o, Point{1.0, 0.0}, Point{-1.0, 0.0}) == Approx(M_PI));
  CHECK(angle_at(o, Point{1.0, 0.0}, Point{1.0, 0.0}) == 0.0);
  CHECK_THROWS_AS(angle_at(o, o, Point{1.0, 0.0}), precondition_error);
}

TEST_CASE("angle_at is exactly symmetric") {
  Rng rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    Point v{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    Point a{rng.uniform(-4, 4), rng.uniform(-4, 4)};
    Point b{rng.uniform(-4, 4), rng.uniform(-4, 4)};
    if (dist(a, v) == 0.0 || dist(b, v) == 0.0) continue;
    double ab = angle_at(v, a, b);
    double ba = angle_at(v, b, a);
    CHECK(std::memcmp(&ab, &ba, sizeof(double)) == 0);
  }
}

TEST_CASE("min_path examples against the dense-sampling oracle") {
  Segment axis = Segment::line_through(Point{0.0, 0.0}, Point{1.0, 0.0});

  SECTION("coincident points over the axis") {
    Point x{0.0, 1.0};
    CHECK(min_path_via_boundary_piece(x, x, axis) == Approx(2.0).epsilon(1e-14));
  }
  SECTION("reflection construction") {
    Point x{0.0, 1.0}, y{0.0, 3.0};
    double got = min_path_via_boundary_piece(x, y, axis);
    CHECK(got == Approx(4.0).epsilon(1e-14));  // |x - y'|
    CHECK(got == Approx(oracle::dense_min_path(x, y, axis)).epsilon(1e-9));
  }
  SECTION("endpoint clamp on a far segment") {
    Point x{-2.0, 1.0}, y{2.0, 1.0};
    Segment far = Segment::through(Point{10.0, 0.0}, Point{11.0, 0.0});
    double expected = std::sqrt(145.0) + std::sqrt(65.0);  // via the (10,0) endpoint
    double got = min_path_via_boundary_piece(x, y, far);
    CHECK(got == Approx(expected).epsilon(1e-14));
    CHECK(got == Approx(oracle::dense_min_path(x, y, far)).epsilon(1e-9));
  }
}

TEST_CASE("min_path agrees with brute force on random pieces") {
  Rng rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    Point x{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    Point y{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    Point a{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    Point b{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    if (dist(a, b) < 1e-6) continue;
    Segment pieces[] = {Segment::through(a, b), Segment::ray_from(a, b - a),
                        Segment::line_through(a, b - a)};
    for (const Segment& s : pieces) {
      double got = min_path_via_boundary_piece(x, y, s);
      double want = oracle::dense_min_path(x, y, s);
      CHECK(got == Approx(want).epsilon(1e-9));
    }
  }
}

TEST_CASE("min_path lower bound and equality characterization") {
  Rng rng(19);
  int equality_cases = 0, strict_cases = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Point x{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    Point y{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    Point a{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    Point b{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    if (dist(a, b) < 1e-6 || dist(x, y) < 1e-6) continue;
    Segment s = Segment::through(a, b);
    double got = min_path_via_boundary_piece(x, y, s);
    double straight = dist(x, y);
    CHECK(got >= straight - 1e-12 * (1.0 + straight));
    if (oracle::segment_meets_piece(x, y, s)) {
      ++equality_cases;
      CHECK(got == Approx(straight).epsilon(1e-12));
    } else {
      ++strict_cases;
      CHECK(got > straight - 1e-12);
    }
  }
  CHECK(equality_cases > 20);
  CHECK(strict_cases > 20);
}

TEST_CASE("points on the line of the piece use the projection clamp") {
  Segment axis = Segment::line_through(Point{0.0, 0.0}, Point{1.0, 0.0});
  Point x{-1.0, 0.0}, y{2.0, 0.0};
  CHECK(min_path_via_boundary_piece(x, y, axis) == Approx(3.0).epsilon(1e-14));
  Segment seg = Segment::through(Point{0.0, 0.0}, Point{1.0, 0.0});
  // both on the segment's line but outside the segment
  Point p{-2.0, 0.0}, q{-1.0, 0.0};
  CHECK(min_path_via_boundary_piece(p, q, seg) ==
        Approx(oracle::dense_min_path(p, q, seg)).epsilon(1e-12));
}

TEST_CASE("segment validation") {
  CHECK_THROWS_AS(Segment::through(Point{1.0, 1.0}, Point{1.0, 1.0}), precondition_error);
  CHECK_THROWS_AS(Segment::ray_from(Point{1.0, 1.0}, Point{0.0, 0.0}), precondition_error);
  CHECK_THROWS_AS(dot(Point{1.0, 2.0}, Point{1.0, 2.0, 3.0}), precondition_error);
}

TEST_CASE("ray_piece_intersection finds forward hits only") {
  Segment seg = Segment::through(Point{-1.0, 1.0}, Point{1.0, 1.0});
  auto hit = ray_piece_intersection(Point{0.0, 0.0}, Point{0.0, 1.0}, seg);
  REQUIRE(hit.has_value());
  CHECK(*hit == Approx(1.0));
  CHECK_FALSE(ray_piece_intersection(Point{0.0, 0.0}, Point{0.0, -1.0}, seg).has_value());
  CHECK_FALSE(ray_piece_intersection(Point{5.0, 0.0}, Point{0.0, 1.0}, seg).has_value());
}
