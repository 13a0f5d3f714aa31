#pragma once

// Directions through a base point whose chord to the far side exceeds a
// cutoff, for any isosceles triangle and any cutoff.

#include <vector>

#include "chordprob/geometry.hpp"
#include "chordprob/quadrature.hpp"

namespace chordprob {

struct AngularInterval {
  double start = 0.0;
  double end = 0.0;

  double length() const { return end - start; }
  friend bool operator==(const AngularInterval&, const AngularInterval&) = default;
};

/// Sorted, pairwise-disjoint open intervals inside (0, pi).
class AngularIntervalSet {
 public:
  AngularIntervalSet() = default;
  /// Throws std::invalid_argument unless the intervals are ordered, disjoint,
  /// non-empty and inside [0, pi].
  explicit AngularIntervalSet(std::vector<AngularInterval> intervals);

  const std::vector<AngularInterval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  bool contains(double theta) const;
  /// Distance from theta to the nearest interval endpoint.
  double boundary_distance(double theta) const;

 private:
  std::vector<AngularInterval> intervals_;
};

double measure(const AngularIntervalSet& set);

/// A triangle plus a chord-length cutoff. The unit configuration uses
/// threshold = base = height = 1.
class GeneralProblem {
 public:
  GeneralProblem() = default;
  /// Throws InvalidTriangle if threshold is negative or not finite.
  GeneralProblem(TriangleSpec spec, double threshold);

  const TriangleSpec& spec() const { return spec_; }
  double threshold() const { return threshold_; }
  bool is_unit() const { return spec_.is_unit() && threshold_ == 1.0; }

  friend bool operator==(const GeneralProblem&, const GeneralProblem&) = default;

 private:
  TriangleSpec spec_;
  double threshold_ = 1.0;
};

inline constexpr double kTangencyTolerance = 1e-14;
inline constexpr double kMinIntervalLength = 1e-12;

/// Segment parameters u in [0, 1] where |S0 + u (S1 - S0) - center| = radius.
/// Returns 0, 1 or 2 values in ascending order.
std::vector<double> circle_segment_params(Point center, double radius, Point s0, Point s1);

/// { theta in (0, pi) : side_hit(spec, p, theta).distance > threshold }.
/// A zero threshold yields the full bundle (0, pi) at every base point.
/// Throws OutOfBase if p is off the base.
AngularIntervalSet direction_set(const GeneralProblem& prob, BasePoint p);

/// Base abscissas where the circle of radius threshold about P changes how it
/// meets the sides: through a vertex, or tangent to a side. measure(x) has
/// square-root kinks there. Sorted, strictly inside the base.
std::vector<double> topology_breakpoints(const GeneralProblem& prob);

/// (1 / (pi * base)) * integral over the base of measure(direction_set(x)).
/// The base is split at topology_breakpoints and each piece is integrated in
/// u under x = lo + (hi - lo)(3u^2 - 2u^3), which flattens the kinks at the
/// piece ends. The tolerance is shared in proportion to piece length.
QuadratureResult probability_general(const GeneralProblem& prob,
                                     double tol = kDefaultQuadratureTolerance);

}  // namespace chordprob
