#include <cmath>
#include <numbers>
#include <random>

#include "chordprob/errors.hpp"
#include "chordprob/geometry.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chordprob;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("triangle spec validates dimensions") {
  CHECK_THROWS_AS(TriangleSpec(0.0, 1.0), InvalidTriangle);
  CHECK_THROWS_AS(TriangleSpec(1.0, -2.0), InvalidTriangle);
  CHECK_THROWS_AS(TriangleSpec(std::nan(""), 1.0), InvalidTriangle);
  CHECK(TriangleSpec().is_unit());
  CHECK_FALSE(TriangleSpec(2.0, 1.0).is_unit());
}

TEST_CASE("vertices") {
  auto v = vertices(TriangleSpec(1.0, 1.0));
  CHECK(v.a == Point{0.5, 0.0});
  CHECK(v.b == Point{0.0, 1.0});
  CHECK(v.c == Point{-0.5, 0.0});

  v = vertices(TriangleSpec(2.0, 1.0));
  CHECK(v.a == Point{1.0, 0.0});
  CHECK(v.b == Point{0.0, 1.0});
  CHECK(v.c == Point{-1.0, 0.0});

  v = vertices(TriangleSpec(1.0, 3.0));
  CHECK(v.a == Point{0.5, 0.0});
  CHECK(v.b == Point{0.0, 3.0});
  CHECK(v.c == Point{-0.5, 0.0});
}

TEST_CASE("base angle") {
  CHECK(base_angle(TriangleSpec(1, 1)) == Approx(1.1071487177940904).epsilon(1e-15));
  CHECK(base_angle(TriangleSpec(2, 1)) == Approx(kPi / 4).epsilon(1e-15));
  CHECK(base_angle(TriangleSpec(1, 0.5)) == Approx(kPi / 4).epsilon(1e-15));
}

TEST_CASE("side_hit examples") {
  const TriangleSpec unit;
  SUBCASE("vertical through the midpoint hits the apex") {
    const auto hit = side_hit(unit, BasePoint{0.0}, kPi / 2);
    CHECK(hit.side == Side::Apex);
    CHECK(hit.point.x == Approx(0.0).epsilon(1e-15));
    CHECK(hit.point.y == Approx(1.0).epsilon(1e-15));
    CHECK(hit.distance == Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("vertical from x = 0.25") {
    const auto hit = side_hit(unit, BasePoint{0.25}, kPi / 2);
    CHECK(hit.side == Side::AB);
    CHECK(std::abs(hit.point.x - 0.25) < 1e-15);
    CHECK(std::abs(hit.point.y - 0.5) < 1e-15);
    CHECK(std::abs(hit.distance - 0.5) < 1e-15);
  }
  SUBCASE("45 degrees from x = -0.25") {
    const auto hit = side_hit(unit, BasePoint{-0.25}, kPi / 4);
    CHECK(hit.side == Side::AB);
    CHECK(std::abs(hit.point.x - 0.25) < 1e-15);
    CHECK(std::abs(hit.point.y - 0.5) < 1e-15);
    CHECK(std::abs(hit.distance - 0.70710678118654752) < 1e-15);
  }
  SUBCASE("steep left ray hits CB") {
    const auto hit = side_hit(unit, BasePoint{0.0}, 3 * kPi / 4);
    CHECK(hit.side == Side::CB);
  }
}

TEST_CASE("side_hit rejects degenerate directions and off-base points") {
  const TriangleSpec unit;
  CHECK_THROWS_AS(side_hit(unit, BasePoint{0.0}, 0.0), DegenerateDirection);
  CHECK_THROWS_AS(side_hit(unit, BasePoint{0.0}, kPi), DegenerateDirection);
  CHECK_THROWS_AS(side_hit(unit, BasePoint{0.0}, -0.3), DegenerateDirection);
  CHECK_THROWS_AS(side_hit(unit, BasePoint{0.0}, std::nan("")), DegenerateDirection);
  CHECK_THROWS_AS(side_hit(unit, BasePoint{0.51}, 1.0), OutOfBase);
}

TEST_CASE("side_hit from a base vertex") {
  const TriangleSpec unit;
  // Leaving A outward: the chord degenerates to the vertex itself.
  auto hit = side_hit(unit, BasePoint{0.5}, 0.3);
  CHECK(hit.side == Side::AB);
  CHECK(hit.distance == 0.0);
  // Into the triangle from A the ray exits through CB.
  hit = side_hit(unit, BasePoint{0.5}, 2.5);
  CHECK(hit.side == Side::CB);
  CHECK(hit.distance > 0.0);
}

TEST_CASE("side_hit consistency against the half-plane oracle") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> base_dist(0.2, 4.0);
  std::uniform_real_distribution<double> unit01(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const TriangleSpec spec(base_dist(rng), base_dist(rng));
    const double x = (unit01(rng) - 0.5) * spec.base();
    const double theta = kPi * (0.001 + 0.998 * unit01(rng));
    const auto hit = side_hit(spec, BasePoint{x}, theta);
    const auto [a, b, c] = vertices(spec);

    CHECK(hit.distance > 0.0);
    CHECK(std::abs(hit.distance - distance(Point{x, 0.0}, hit.point)) < 1e-12);
    CHECK(hit.distance == Approx(testing::oracle_chord(spec.base(), spec.height(), x, theta))
                              .epsilon(1e-10));
    // The point satisfies the named side's line equation and lies on the segment.
    const double h = spec.height();
    const double half = spec.half_base();
    if (hit.side == Side::AB) {
      CHECK(std::abs(h * hit.point.x + half * hit.point.y - h * half) < 1e-12 * (1 + h * half));
      CHECK(hit.point.x >= -1e-12);
      CHECK(hit.point.x <= a.x + 1e-12);
    } else if (hit.side == Side::CB) {
      CHECK(std::abs(-h * hit.point.x + half * hit.point.y - h * half) < 1e-12 * (1 + h * half));
      CHECK(hit.point.x <= 1e-12);
      CHECK(hit.point.x >= c.x - 1e-12);
    } else {
      CHECK(distance(hit.point, b) < kApexTolerance);
    }
  }
}

TEST_CASE("limit angle components") {
  SUBCASE("midpoint") {
    const auto br = limit_angle_components(BasePoint{0.0});
    CHECK(br.angle_q == Approx(std::atan(0.5)).epsilon(1e-15));
    CHECK(br.angle_r == Approx(std::atan(0.5)).epsilon(1e-15));
    CHECK(br.angle_a == br.angle_c);
    CHECK(br.alpha < 1e-15);
  }
  SUBCASE("endpoint") {
    const auto br = limit_angle_components(BasePoint{0.5});
    CHECK(br.angle_q == 0.0);
    CHECK(br.angle_r == Approx(std::atan(2.0)).epsilon(1e-15));
    CHECK(std::abs(br.alpha - 0.17985349979247827) < 1e-14);
  }
  SUBCASE("x = 0.25") {
    const auto br = limit_angle_components(BasePoint{0.25});
    CHECK(std::abs(br.alpha - 0.033532640713187395) < 1e-14);
    CHECK(br.alpha == Approx(br.angle_q + br.angle_r + br.angle_a + br.angle_c - kPi));
  }
  CHECK_THROWS_AS(limit_angle_components(BasePoint{0.5000001}), OutOfBase);
  CHECK_THROWS_AS(limit_angle(BasePoint{-0.7}), OutOfBase);
}

TEST_CASE("limit angle values") {
  CHECK(limit_angle(BasePoint{0.0}) < 1e-15);
  CHECK(std::abs(limit_angle(BasePoint{0.5}) - 0.17985349979247827) < 1e-14);
  CHECK(limit_angle(BasePoint{-0.5}) == limit_angle(BasePoint{0.5}));
  CHECK(std::abs(limit_angle(BasePoint{0.25}) - 0.033532640713187395) < 1e-14);
  CHECK(std::abs(limit_angle_max() - 0.17985349979247827) < 1e-15);
}

TEST_CASE("limit angle symmetry, sign and monotonicity on a 1001-point grid") {
  double previous = limit_angle(BasePoint{-0.5});
  for (int i = 0; i <= 1000; ++i) {
    const double x = -0.5 + i / 1000.0;
    const double alpha = limit_angle(BasePoint{x});
    CHECK(std::abs(alpha - limit_angle(BasePoint{-x})) <= 1e-15);
    CHECK(alpha >= 0.0);
    CHECK(alpha <= limit_angle_max() + 1e-15);
    if (i > 0 && x <= 0.0) CHECK(alpha <= previous);
    if (i > 0 && x > 0.0) CHECK(alpha >= previous);
    if (std::abs(x) > 1e-9) CHECK(alpha > 0.0);
    // arcsin arguments stay inside [-2/sqrt5, 2/sqrt5]
    CHECK(std::abs((1 - 2 * x) / std::sqrt(5.0)) <= 2 / std::sqrt(5.0) + 1e-16);
    previous = alpha;
  }
}

TEST_CASE("boundary rays of the limit sub-bundle have unit chords") {
  // The arc of radius 1 about P meets AB at Q and CB at R; both boundary
  // rays must exit the triangle at distance exactly 1.
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> xs(-0.5, 0.5);
  const TriangleSpec unit;
  for (int trial = 0; trial < 100; ++trial) {
    const double x = xs(rng);
    const auto br = limit_angle_components(BasePoint{x});
    // PQ makes angle QPA = pi - A - Q with PA (the +x axis); PR makes
    // angle CPR = pi - C - R with PC.
    const double to_q = kPi - br.angle_a - br.angle_q;
    const double to_r = br.angle_c + br.angle_r;
    if (to_r - to_q < 1e-9) continue;
    CHECK(std::abs(side_hit(unit, BasePoint{x}, to_q).distance - 1.0) < 1e-9);
    CHECK(std::abs(side_hit(unit, BasePoint{x}, to_r).distance - 1.0) < 1e-9);
    CHECK(to_r - to_q == Approx(br.alpha).epsilon(1e-12));
  }
}
