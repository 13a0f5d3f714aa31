#include "chordprob/exact.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "chordprob/errors.hpp"

namespace chordprob {

namespace {

constexpr double kPi = std::numbers::pi;

void require_unit_base(double x) {
  if (!(std::abs(x) <= 0.5)) {
    throw OutOfBase("x = " + std::to_string(x) + " outside [-0.5, 0.5]");
  }
}

double asin_minus(double x) { return std::asin((1.0 - 2.0 * x) / std::sqrt(5.0)); }
double asin_plus(double x) { return std::asin((1.0 + 2.0 * x) / std::sqrt(5.0)); }

}  // namespace

double i1(double x) {
  require_unit_base(x);
  return (x - 0.5) * asin_minus(x) - std::sqrt(-x * x + x + 1.0);
}

double i2(double x) {
  require_unit_base(x);
  return (x + 0.5) * asin_plus(x) + std::sqrt(-x * x - x + 1.0);
}

double i3(double x) {
  require_unit_base(x);
  return std::sqrt(-x * x + x + 1.0) + 0.5 * asin_minus(x);
}

double i4(double x) {
  require_unit_base(x);
  return -0.5 * asin_minus(x);
}

double i1_integrand(double x) {
  require_unit_base(x);
  return asin_minus(x);
}

double i2_integrand(double x) {
  require_unit_base(x);
  return asin_plus(x);
}

double i3_integrand(double x) {
  require_unit_base(x);
  return -x / std::sqrt(-x * x + x + 1.0);
}

double i4_integrand(double x) {
  require_unit_base(x);
  return 1.0 / (2.0 * std::sqrt(-x * x + x + 1.0));
}

double bracket_definite() { return (i1(0.5) + i2(0.5)) - (i1(-0.5) + i2(-0.5)); }

double bracket_closed_form() {
  return 2.0 * std::atan(1.0 / 3.0) + kPi / 2.0 + 1.0 - std::sqrt(5.0);
}

double p_exact_arctan_form() {
  return (2.0 / kPi) * (std::atan(1.0 / 3.0) + std::atan(2.0)) - (std::sqrt(5.0) - 1.0) / kPi -
         0.5;
}

double p_exact_phi_form() {
  const double phi = std::numbers::phi;
  return (2.0 / kPi) * (2.0 * std::atan(1.0 / 3.0) - 1.0 / phi);
}

double p_exact_from_bracket() {
  return bracket_definite() / kPi + (2.0 / kPi) * std::atan(2.0) - 1.0;
}

ExactConstants exact_constants() {
  return {(1.0 + std::sqrt(5.0)) / 2.0, p_exact_phi_form(), bracket_closed_form()};
}

double arctan_identity_residual() { return std::atan(2.0) - std::atan(1.0 / 3.0) - kPi / 4.0; }

ArctanIdentityCheck arctan_identity_check() {
  using C = std::complex<double>;
  const C u{3.0, 1.0};
  const C v{1.0, 1.0};
  const C w = u * v;
  const C expected{2.0, 4.0};

  ArctanIdentityCheck out;
  out.residual = arctan_identity_residual();
  out.argument_residual = std::arg(u) + std::arg(v) - std::arg(w);
  out.product_residual = std::abs(w - expected);
  out.modulus_residual = std::abs(u) * std::abs(v) - std::abs(expected);
  out.apex_residual = std::arg(expected) - std::atan(2.0);
  out.tangent_residual = std::tan(std::atan(1.0 / 3.0) + kPi / 4.0) - 2.0;
  return out;
}

}  // namespace chordprob
