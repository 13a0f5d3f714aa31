#include "chordprob/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "chordprob/errors.hpp"

namespace chordprob {

namespace {

constexpr double kPi = std::numbers::pi;

double cross(Point u, Point v) { return u.x * v.y - u.y * v.x; }

struct SegmentHit {
  double ray_t;
  Point point;
};

// Ray P + t d against segment S0 + u (S1 - S0), u in [0, 1] with slack.
std::optional<SegmentHit> intersect(Point p, Point d, Point s0, Point s1) {
  const Point e{s1.x - s0.x, s1.y - s0.y};
  const double denom = cross(d, e);
  if (denom == 0.0) return std::nullopt;
  const Point w{s0.x - p.x, s0.y - p.y};
  const double t = cross(w, e) / denom;
  const double u = cross(w, d) / denom;
  if (t < -kSegmentSlack || u < -kSegmentSlack || u > 1.0 + kSegmentSlack) {
    return std::nullopt;
  }
  const double uc = std::clamp(u, 0.0, 1.0);
  return SegmentHit{std::max(t, 0.0), Point{s0.x + uc * e.x, s0.y + uc * e.y}};
}

}  // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

TriangleSpec::TriangleSpec(double base, double height) : base_(base), height_(height) {
  if (!(std::isfinite(base) && base > 0.0)) {
    throw InvalidTriangle("triangle base must be positive and finite, got " + std::to_string(base));
  }
  if (!(std::isfinite(height) && height > 0.0)) {
    throw InvalidTriangle("triangle height must be positive and finite, got " +
                          std::to_string(height));
  }
}

void require_on_base(const TriangleSpec& spec, BasePoint p) {
  if (!(std::abs(p.x) <= spec.half_base())) {
    throw OutOfBase("base point x = " + std::to_string(p.x) + " outside [-" +
                    std::to_string(spec.half_base()) + ", " + std::to_string(spec.half_base()) +
                    "]");
  }
}

Vertices vertices(const TriangleSpec& spec) {
  return {Point{spec.half_base(), 0.0}, Point{0.0, spec.height()}, Point{-spec.half_base(), 0.0}};
}

double base_angle(const TriangleSpec& spec) { return std::atan(2.0 * spec.height() / spec.base()); }

const char* to_string(Side side) {
  switch (side) {
    case Side::AB: return "AB";
    case Side::CB: return "CB";
    case Side::Apex: return "APEX";
  }
  return "?";
}

RayHit side_hit(const TriangleSpec& spec, BasePoint p, double theta) {
  if (!(theta > 0.0 && theta < kPi)) {
    throw DegenerateDirection("ray direction " + std::to_string(theta) + " not in (0, pi)");
  }
  require_on_base(spec, p);

  const auto [a, b, c] = vertices(spec);
  const Point origin{p.x, 0.0};
  const Point dir{std::cos(theta), std::sin(theta)};

  const auto on_ab = intersect(origin, dir, a, b);
  const auto on_cb = intersect(origin, dir, c, b);

  // From a base vertex the ray also meets the adjacent side at t = 0; the
  // farther hit is the exit point.
  Side side;
  SegmentHit hit;
  if (on_ab && (!on_cb || on_ab->ray_t >= on_cb->ray_t)) {
    side = Side::AB;
    hit = *on_ab;
  } else if (on_cb) {
    side = Side::CB;
    hit = *on_cb;
  } else {
    // Unreachable for theta in (0, pi) and P on the base; snap to the apex.
    side = Side::Apex;
    hit = SegmentHit{distance(origin, b), b};
  }
  if (distance(hit.point, b) < kApexTolerance) side = Side::Apex;
  return RayHit{side, hit.point, distance(origin, hit.point)};
}

LimitAngleBreakdown limit_angle_components(BasePoint p) {
  if (!(std::abs(p.x) <= 0.5)) {
    throw OutOfBase("base point x = " + std::to_string(p.x) + " outside [-0.5, 0.5]");
  }
  const double sqrt5 = std::sqrt(5.0);
  LimitAngleBreakdown out;
  out.angle_q = std::asin((1.0 - 2.0 * p.x) / sqrt5);
  out.angle_r = std::asin((1.0 + 2.0 * p.x) / sqrt5);
  out.angle_a = std::atan(2.0);
  out.angle_c = out.angle_a;
  // Rounding can leave -4e-16 at the midpoint.
  out.alpha = std::max(0.0, (out.angle_q + out.angle_r) + (out.angle_a + out.angle_c) - kPi);
  return out;
}

double limit_angle(BasePoint p) { return limit_angle_components(p).alpha; }

double limit_angle_max() { return 3.0 * std::atan(2.0) - kPi; }

}  // namespace chordprob
