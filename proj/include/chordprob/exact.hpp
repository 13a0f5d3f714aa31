#pragma once

// Closed-form results for the unit configuration (base = height = cutoff = 1).
//
// The density alpha(x) splits into two arcsine terms whose antiderivatives
// are obtained by parts:
//
//   I1(x) = (x - 1/2) asin((1 - 2x)/sqrt5) - sqrt(-x^2 + x + 1)
//   I2(x) = (x + 1/2) asin((1 + 2x)/sqrt5) + sqrt(-x^2 - x + 1)
//
// with the intermediate pieces
//
//   I3(x) = sqrt(-x^2 + x + 1) + asin((1 - 2x)/sqrt5) / 2
//   I4(x) = -asin((1 - 2x)/sqrt5) / 2
//
// Integration constants are zero throughout. All functions throw OutOfBase
// outside [-1/2, 1/2].

namespace chordprob {

double i1(double x);
double i2(double x);
double i3(double x);
double i4(double x);

/// Integrands of i1..i4.
double i1_integrand(double x);
double i2_integrand(double x);
double i3_integrand(double x);
double i4_integrand(double x);

/// [I1 + I2] evaluated between -1/2 and 1/2 from the antiderivatives.
double bracket_definite();
/// The same bracket in closed form, 2 atan(1/3) + pi/2 + 1 - sqrt5.
double bracket_closed_form();

/// (2/pi)(atan(1/3) + atan(2)) - (sqrt5 - 1)/pi - 1/2
double p_exact_arctan_form();
/// (2/pi)(2 atan(1/3) - 1/phi)
double p_exact_phi_form();
/// (1/pi) bracket + (2/pi) atan(2) - 1, assembled from the antiderivatives.
double p_exact_from_bracket();

struct ExactConstants {
  double phi;
  double p_exact;
  double bracket;
};

ExactConstants exact_constants();

/// atan(2) - atan(1/3) - pi/4.
double arctan_identity_residual();

/// Independent routes to atan(2) = atan(1/3) + pi/4.
struct ArctanIdentityCheck {
  double residual;           // atan(2) - atan(1/3) - pi/4
  double argument_residual;  // arg(3+i) + arg(1+i) - arg((3+i)(1+i))
  double product_residual;   // |(3+i)(1+i) - (2+4i)|
  double modulus_residual;   // |3+i| |1+i| - |2+4i|, i.e. sqrt10 sqrt2 - sqrt20
  double apex_residual;      // arg(2+4i) - atan(2)
  double tangent_residual;   // tan(atan(1/3) + pi/4) - 2
};

ArctanIdentityCheck arctan_identity_check();

}  // namespace chordprob
