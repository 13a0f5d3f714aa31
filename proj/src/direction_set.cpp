#include "chordprob/direction_set.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <limits>
#include <string>
#include <utility>

#include "chordprob/errors.hpp"

namespace chordprob {

namespace {

constexpr double kPi = std::numbers::pi;

double direction_to(Point from, Point to) {
  return std::atan2(to.y - from.y, to.x - from.x);
}

}  // namespace

AngularIntervalSet::AngularIntervalSet(std::vector<AngularInterval> intervals)
    : intervals_(std::move(intervals)) {
  double previous_end = 0.0;
  for (const auto& iv : intervals_) {
    if (!(iv.start >= previous_end && iv.start < iv.end && iv.end <= kPi)) {
      throw std::invalid_argument("angular intervals must be sorted, disjoint and inside [0, pi]");
    }
    previous_end = iv.end;
  }
}

bool AngularIntervalSet::contains(double theta) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), theta,
                             [](double t, const AngularInterval& iv) { return t < iv.end; });
  return it != intervals_.end() && theta > it->start && theta < it->end;
}

double AngularIntervalSet::boundary_distance(double theta) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& iv : intervals_) {
    best = std::min({best, std::abs(theta - iv.start), std::abs(theta - iv.end)});
  }
  return best;
}

double measure(const AngularIntervalSet& set) {
  double total = 0.0;
  for (const auto& iv : set.intervals()) total += iv.length();
  return total;
}

GeneralProblem::GeneralProblem(TriangleSpec spec, double threshold)
    : spec_(spec), threshold_(threshold) {
  if (!(std::isfinite(threshold) && threshold >= 0.0)) {
    throw InvalidTriangle("chord threshold must be nonnegative and finite, got " +
                          std::to_string(threshold));
  }
}

std::vector<double> circle_segment_params(Point center, double radius, Point s0, Point s1) {
  const Point e{s1.x - s0.x, s1.y - s0.y};
  const Point w{s0.x - center.x, s0.y - center.y};
  const double a = e.x * e.x + e.y * e.y;
  const double b = 2.0 * (e.x * w.x + e.y * w.y);
  const double c = w.x * w.x + w.y * w.y - radius * radius;
  const double disc = b * b - 4.0 * a * c;

  std::vector<double> roots;
  if (disc < -kTangencyTolerance) return roots;
  if (std::abs(disc) < kTangencyTolerance) {
    roots.push_back(-b / (2.0 * a));
  } else {
    // Stable pairing avoids cancellation in -b +- sqrt(disc).
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    const double r1 = q / a;
    const double r2 = q != 0.0 ? c / q : -r1;
    roots.push_back(std::min(r1, r2));
    roots.push_back(std::max(r1, r2));
  }
  std::erase_if(roots, [](double u) { return u < 0.0 || u > 1.0; });
  return roots;
}

AngularIntervalSet direction_set(const GeneralProblem& prob, BasePoint p) {
  const TriangleSpec& spec = prob.spec();
  require_on_base(spec, p);
  const double t = prob.threshold();
  if (t == 0.0) return AngularIntervalSet({{0.0, kPi}});

  const auto [a, b, c] = vertices(spec);
  const Point origin{p.x, 0.0};

  std::vector<double> critical{0.0, kPi, direction_to(origin, b)};
  for (const auto& [s0, s1] : {std::pair{a, b}, std::pair{c, b}}) {
    for (double u : circle_segment_params(origin, t, s0, s1)) {
      const Point q{s0.x + u * (s1.x - s0.x), s0.y + u * (s1.y - s0.y)};
      const double angle = direction_to(origin, q);
      if (angle > 0.0 && angle < kPi) critical.push_back(angle);
    }
  }
  std::sort(critical.begin(), critical.end());

  std::vector<AngularInterval> kept;
  for (std::size_t i = 0; i + 1 < critical.size(); ++i) {
    const double lo = critical[i];
    const double hi = critical[i + 1];
    if (hi - lo < kMinIntervalLength) continue;
    if (side_hit(spec, p, 0.5 * (lo + hi)).distance <= t) continue;
    if (!kept.empty() && kept.back().end == lo) {
      kept.back().end = hi;
    } else {
      kept.push_back({lo, hi});
    }
  }
  std::erase_if(kept, [](const AngularInterval& iv) { return iv.length() < kMinIntervalLength; });
  return AngularIntervalSet(std::move(kept));
}

std::vector<double> topology_breakpoints(const GeneralProblem& prob) {
  const double half = prob.spec().half_base();
  const double h = prob.spec().height();
  const double t = prob.threshold();
  std::vector<double> xs;
  if (t == 0.0) return xs;

  // |PA| = t and |PC| = t
  xs.push_back(half - t);
  xs.push_back(t - half);
  // |PB| = t
  if (t >= h) {
    const double r = std::sqrt(t * t - h * h);
    xs.push_back(r);
    xs.push_back(-r);
  }
  // distance from P to line AB (resp. CB) equals t
  const double offset = t * std::hypot(h, half) / h;
  xs.push_back(half - offset);
  xs.push_back(offset - half);

  std::erase_if(xs, [half](double x) { return !(x > -half && x < half); });
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

QuadratureResult probability_general(const GeneralProblem& prob, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("probability_general: tolerance must be positive");
  const double half = prob.spec().half_base();
  std::vector<double> knots{-half};
  for (double x : topology_breakpoints(prob)) knots.push_back(x);
  knots.push_back(half);

  QuadratureResult total;
  total.converged = true;
  total.tolerance = tol;
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const double lo = knots[k];
    const double width = knots[k + 1] - lo;
    const auto piece = integrate_profile(
        [&prob, lo, width, half](double u) {
          const double x = std::clamp(lo + width * u * u * (3.0 - 2.0 * u), -half, half);
          const double jacobian = 6.0 * width * u * (1.0 - u);
          if (jacobian == 0.0) return 0.0;
          return measure(direction_set(prob, BasePoint{x})) * jacobian;
        },
        0.0, 1.0, tol * width / prob.spec().base());
    total.integral += piece.integral;
    total.evaluations += piece.evaluations;
    total.error_estimate += piece.error_estimate;
    total.converged = total.converged && piece.converged;
  }
  total.probability = total.integral / (kPi * prob.spec().base());
  return total;
}

}  // namespace chordprob
