#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "chordprob/direction_set.hpp"

namespace chordprob {

/// Sampled (x, alpha(x)) table across the base.
struct DensityProfile {
  std::vector<double> x;
  std::vector<double> alpha;

  std::size_t size() const { return x.size(); }
  friend bool operator==(const DensityProfile&, const DensityProfile&) = default;
};

/// `points` equally spaced abscissas from -base/2 to base/2. The grid is
/// exactly symmetric (x[n-1-i] == -x[i]) and hits both endpoints exactly.
/// Throws std::invalid_argument if points < 2.
std::vector<double> base_grid(const TriangleSpec& spec, std::size_t points);

/// Angular measure at one base point: the closed form for the unit
/// configuration, the direction-set measure otherwise.
double profile_value(const GeneralProblem& prob, double x);

/// OpenMP kernel over the grid; workers = 0 uses the default team size.
DensityProfile density_profile(const GeneralProblem& prob, std::size_t points, int workers = 0);
DensityProfile density_profile_serial(const GeneralProblem& prob, std::size_t points);

/// Header "x,alpha", 17 significant digits, '\n' line endings.
void write_density_csv(std::ostream& out, const DensityProfile& profile);
/// Throws std::runtime_error on a malformed header or row.
DensityProfile read_density_csv(std::istream& in);

}  // namespace chordprob
