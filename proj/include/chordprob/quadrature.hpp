#pragma once

#include <cstddef>
#include <functional>

namespace chordprob {

struct QuadratureResult {
  double integral = 0.0;
  /// integral / (pi * (hi - lo)): the chord probability when the integrand
  /// is an angular measure over a base of length hi - lo.
  double probability = 0.0;
  std::size_t evaluations = 0;
  double tolerance = 0.0;
  /// Sum of the per-panel Richardson estimates |S_fine - S_coarse| / 15.
  double error_estimate = 0.0;
  bool converged = false;
};

inline constexpr double kDefaultQuadratureTolerance = 1e-12;
inline constexpr int kMaxQuadratureDepth = 50;

/// Adaptive Simpson over [lo, hi]. A panel is accepted once its Richardson
/// estimate is within its share of tol; panels that reach max_depth are
/// accepted as-is and clear `converged`.
///
/// Throws std::invalid_argument on lo >= hi or tol <= 0, and NonFiniteSample
/// when f returns NaN or infinity.
QuadratureResult integrate_profile(const std::function<double(double)>& f, double lo, double hi,
                                   double tol, int max_depth = kMaxQuadratureDepth);

/// Integrates the unit-configuration limit angle over [-1/2, 1/2].
QuadratureResult probability_by_quadrature(double tol = kDefaultQuadratureTolerance);

}  // namespace chordprob
