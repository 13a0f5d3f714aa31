#include "chordprob/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "chordprob/errors.hpp"
#include "chordprob/geometry.hpp"

namespace chordprob {

namespace {

class AdaptiveSimpson {
 public:
  AdaptiveSimpson(const std::function<double(double)>& f, int max_depth)
      : f_(f), max_depth_(max_depth) {}

  double eval(double x) {
    const double y = f_(x);
    ++evaluations_;
    if (!std::isfinite(y)) {
      throw NonFiniteSample("integrand returned " + std::to_string(y) + " at x = " +
                            std::to_string(x));
    }
    return y;
  }

  // [a, b] with f(a), f((a+b)/2), f(b) already known and whole = Simpson(a, b).
  double refine(double a, double b, double fa, double fm, double fb, double whole, double tol,
                int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    const double err = std::abs(delta) / 15.0;

    if (err <= tol) {
      error_ += err;
      return left + right + delta / 15.0;
    }
    if (depth >= max_depth_) {
      error_ += err;
      converged_ = false;
      return left + right + delta / 15.0;
    }
    return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           refine(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }

  std::size_t evaluations() const { return evaluations_; }
  double error() const { return error_; }
  bool converged() const { return converged_; }

 private:
  const std::function<double(double)>& f_;
  int max_depth_;
  std::size_t evaluations_ = 0;
  double error_ = 0.0;
  bool converged_ = true;
};

}  // namespace

QuadratureResult integrate_profile(const std::function<double(double)>& f, double lo, double hi,
                                   double tol, int max_depth) {
  if (!(lo < hi)) throw std::invalid_argument("integrate_profile: need lo < hi");
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_profile: tolerance must be positive");

  AdaptiveSimpson simpson(f, max_depth);
  const double fa = simpson.eval(lo);
  const double fb = simpson.eval(hi);
  const double fm = simpson.eval(0.5 * (lo + hi));
  const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
  const double integral = simpson.refine(lo, hi, fa, fm, fb, whole, tol, 0);

  QuadratureResult out;
  out.integral = integral;
  out.probability = integral / (std::numbers::pi * (hi - lo));
  out.evaluations = simpson.evaluations();
  out.tolerance = tol;
  out.error_estimate = simpson.error();
  out.converged = simpson.converged();
  return out;
}

QuadratureResult probability_by_quadrature(double tol) {
  return integrate_profile([](double x) { return limit_angle(BasePoint{x}); }, -0.5, 0.5, tol);
}

}  // namespace chordprob
