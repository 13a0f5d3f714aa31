#pragma once

#include <stdexcept>
#include <string>

namespace chordprob {

/// Triangle dimensions or thresholds outside their valid range.
class InvalidTriangle : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base point abscissa outside [-base/2, base/2].
class OutOfBase : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Ray direction outside the open interval (0, pi).
class DegenerateDirection : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Integrand returned NaN or infinity.
class NonFiniteSample : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace chordprob
