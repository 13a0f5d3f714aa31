#pragma once

// Plain Monte Carlo over (x, theta) ~ Uniform(base) x Uniform(0, pi).
//
// Sample i is a pure function of (seed, i) through Philox, and samples are
// processed in blocks of kBlockSize whose success counts are reduced in
// block order. Results are therefore bit-identical for any worker count.
// The *_serial functions are the single-loop reference kernels.

#include <cstdint>
#include <string>

#include "chordprob/direction_set.hpp"
#include "chordprob/geometry.hpp"

namespace chordprob {

enum class Method { MonteCarlo, Quadrature, Exact };

const char* to_string(Method method);
/// Throws std::invalid_argument on unknown names.
Method method_from_string(const std::string& name);

struct ProbabilityEstimate {
  Method method = Method::Exact;
  std::string label;
  double p_hat = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t successes = 0;
  double std_error = 0.0;
  double ci95_lo = 0.0;
  double ci95_hi = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const ProbabilityEstimate&, const ProbabilityEstimate&) = default;
};

/// p_hat = k/n, std_error = sqrt(p(1-p)/n), ci95 = p +- 1.96 se clipped to [0, 1].
ProbabilityEstimate binomial_estimate(std::uint64_t successes, std::uint64_t samples,
                                      std::uint64_t seed);
/// Deterministic value with zero uncertainty.
ProbabilityEstimate point_estimate(double p, Method method, std::string label);

inline constexpr std::uint64_t kBlockSize = std::uint64_t{1} << 16;

struct SampleDraw {
  double x;
  double theta;
};

/// The i-th (x, theta) draw for a given seed; theta is never 0.
SampleDraw draw_sample(const TriangleSpec& spec, std::uint64_t seed, std::uint64_t index);
/// The i-th theta-only draw used at a fixed base point.
double draw_direction(std::uint64_t seed, std::uint64_t index);

std::uint64_t count_successes(const GeneralProblem& prob, std::uint64_t samples,
                              std::uint64_t seed, int workers = 0);
std::uint64_t count_successes_serial(const GeneralProblem& prob, std::uint64_t samples,
                                     std::uint64_t seed);

/// workers = 0 uses the OpenMP default team size. Throws std::invalid_argument
/// if samples == 0.
ProbabilityEstimate estimate(const GeneralProblem& prob, std::uint64_t samples,
                             std::uint64_t seed, int workers = 0);
ProbabilityEstimate estimate_serial(const GeneralProblem& prob, std::uint64_t samples,
                                    std::uint64_t seed);

/// pi * (fraction of theta draws whose chord from p exceeds the threshold).
double empirical_limit_angle(const GeneralProblem& prob, BasePoint p, std::uint64_t samples,
                             std::uint64_t seed, int workers = 0);
double empirical_limit_angle_serial(const GeneralProblem& prob, BasePoint p,
                                    std::uint64_t samples, std::uint64_t seed);

}  // namespace chordprob
