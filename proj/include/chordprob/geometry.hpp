#pragma once

// Isosceles triangle model in the frame with origin at the base midpoint O,
// x-axis towards A and y-axis towards the apex B:
// A = (b/2, 0), B = (0, h), C = (-b/2, 0).

#include <numbers>

namespace chordprob {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

double distance(Point a, Point b);

class TriangleSpec {
 public:
  /// Unit configuration: base AC = height OB = 1.
  TriangleSpec() = default;
  /// Throws InvalidTriangle unless both dimensions are positive and finite.
  TriangleSpec(double base, double height);

  double base() const { return base_; }
  double height() const { return height_; }
  double half_base() const { return 0.5 * base_; }

  bool is_unit() const { return base_ == 1.0 && height_ == 1.0; }

  friend bool operator==(const TriangleSpec&, const TriangleSpec&) = default;

 private:
  double base_ = 1.0;
  double height_ = 1.0;
};

/// Abscissa of a point P = (x, 0) on the base.
struct BasePoint {
  double x = 0.0;
};

/// Throws OutOfBase when |p.x| > base/2.
void require_on_base(const TriangleSpec& spec, BasePoint p);

struct Vertices {
  Point a;
  Point b;
  Point c;
};

Vertices vertices(const TriangleSpec& spec);

/// The equal base angles A = C = arctan(2 h / b).
double base_angle(const TriangleSpec& spec);

enum class Side { AB, CB, Apex };

const char* to_string(Side side);

struct RayHit {
  Side side = Side::Apex;
  Point point;
  double distance = 0.0;
};

inline constexpr double kApexTolerance = 1e-12;
inline constexpr double kSegmentSlack = 1e-12;

/// Exit point of the ray from P = (x, 0) with direction (cos theta, sin theta)
/// through side AB or CB. The hit is labelled Apex when it lies within
/// kApexTolerance of B.
///
/// When P is a base vertex and the ray leaves the triangle immediately, the
/// hit is P itself on the adjacent side with distance 0.
///
/// Throws DegenerateDirection if theta is not in (0, pi) and OutOfBase if P
/// is off the base.
RayHit side_hit(const TriangleSpec& spec, BasePoint p, double theta);

/// Angle decomposition alpha = Q + R + A + C - pi for the unit configuration
/// (chord cutoff equal to the base).
struct LimitAngleBreakdown {
  double angle_q = 0.0;
  double angle_r = 0.0;
  double angle_a = 0.0;
  double angle_c = 0.0;
  double alpha = 0.0;
};

/// Unit configuration only. Throws OutOfBase if |x| > 1/2.
LimitAngleBreakdown limit_angle_components(BasePoint p);

/// Measure of the directions through P whose chord exceeds the base length,
/// unit configuration. Lies in [0, 3 atan(2) - pi] and is even in x.
double limit_angle(BasePoint p);

/// alpha(+-1/2) = 3 atan(2) - pi.
double limit_angle_max();

}  // namespace chordprob
