#include "chordprob/density.hpp"

#include <omp.h>

#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace chordprob {

std::vector<double> base_grid(const TriangleSpec& spec, std::size_t points) {
  if (points < 2) throw std::invalid_argument("density grid needs at least 2 points");
  const double intervals = static_cast<double>(points - 1);
  std::vector<double> xs(points);
  for (std::size_t i = 0; i < points; ++i) {
    // (2i - (n-1)) / (n-1) is exact at the ends and odd under i -> n-1-i.
    const double ratio = (2.0 * static_cast<double>(i) - intervals) / intervals;
    xs[i] = spec.half_base() * ratio;
  }
  return xs;
}

double profile_value(const GeneralProblem& prob, double x) {
  if (prob.is_unit()) return limit_angle(BasePoint{x});
  return measure(direction_set(prob, BasePoint{x}));
}

DensityProfile density_profile(const GeneralProblem& prob, std::size_t points, int workers) {
  DensityProfile out;
  out.x = base_grid(prob.spec(), points);
  out.alpha.resize(points);
  const auto n = static_cast<std::int64_t>(points);
  const int team = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel for schedule(static) num_threads(team)
  for (std::int64_t i = 0; i < n; ++i) {
    out.alpha[static_cast<std::size_t>(i)] = profile_value(prob, out.x[static_cast<std::size_t>(i)]);
  }
  return out;
}

DensityProfile density_profile_serial(const GeneralProblem& prob, std::size_t points) {
  DensityProfile out;
  out.x = base_grid(prob.spec(), points);
  out.alpha.reserve(points);
  for (double x : out.x) out.alpha.push_back(profile_value(prob, x));
  return out;
}

void write_density_csv(std::ostream& out, const DensityProfile& profile) {
  out << "x,alpha\n";
  char line[96];
  for (std::size_t i = 0; i < profile.size(); ++i) {
    std::snprintf(line, sizeof line, "%.17g,%.17g\n", profile.x[i], profile.alpha[i]);
    out << line;
  }
}

DensityProfile read_density_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "x,alpha") {
    throw std::runtime_error("density CSV: expected header 'x,alpha'");
  }
  DensityProfile profile;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("density CSV: bad row '" + line + "'");
    std::size_t used_x = 0, used_a = 0;
    const std::string xs = line.substr(0, comma);
    const std::string as = line.substr(comma + 1);
    try {
      profile.x.push_back(std::stod(xs, &used_x));
      profile.alpha.push_back(std::stod(as, &used_a));
    } catch (const std::logic_error&) {
      throw std::runtime_error("density CSV: bad row '" + line + "'");
    }
    if (used_x != xs.size() || used_a != as.size()) {
      throw std::runtime_error("density CSV: bad row '" + line + "'");
    }
  }
  return profile;
}

}  // namespace chordprob
