#include "chordprob/monte_carlo.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "chordprob/philox.hpp"

namespace chordprob {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint32_t kJointStream = 0;
constexpr std::uint32_t kDirectionStream = 1;

PhiloxCounter sample_counter(std::uint64_t index, std::uint32_t attempt, std::uint32_t stream) {
  return {static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), attempt,
          stream};
}

void require_samples(std::uint64_t samples) {
  if (samples == 0) throw std::invalid_argument("sample count must be at least 1");
}

int team_size(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

// Counts successes for samples [begin, end); `hit` maps a sample index to 0/1.
template <typename Hit>
std::uint64_t count_range(std::uint64_t begin, std::uint64_t end, const Hit& hit) {
  std::uint64_t k = 0;
  for (std::uint64_t i = begin; i < end; ++i) k += hit(i) ? 1 : 0;
  return k;
}

template <typename Hit>
std::uint64_t count_blocked(std::uint64_t samples, int workers, const Hit& hit) {
  const auto blocks = static_cast<std::int64_t>((samples + kBlockSize - 1) / kBlockSize);
  std::vector<std::uint64_t> per_block(static_cast<std::size_t>(blocks), 0);

#pragma omp parallel for schedule(dynamic, 1) num_threads(team_size(workers))
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBlockSize;
    const std::uint64_t end = std::min(samples, begin + kBlockSize);
    per_block[static_cast<std::size_t>(b)] = count_range(begin, end, hit);
  }

  std::uint64_t total = 0;
  for (std::uint64_t k : per_block) total += k;
  return total;
}

}  // namespace

const char* to_string(Method method) {
  switch (method) {
    case Method::MonteCarlo: return "MONTE_CARLO";
    case Method::Quadrature: return "QUADRATURE";
    case Method::Exact: return "EXACT";
  }
  return "?";
}

Method method_from_string(const std::string& name) {
  if (name == "MONTE_CARLO") return Method::MonteCarlo;
  if (name == "QUADRATURE") return Method::Quadrature;
  if (name == "EXACT") return Method::Exact;
  throw std::invalid_argument("unknown method tag: " + name);
}

ProbabilityEstimate binomial_estimate(std::uint64_t successes, std::uint64_t samples,
                                      std::uint64_t seed) {
  require_samples(samples);
  ProbabilityEstimate e;
  e.method = Method::MonteCarlo;
  e.label = "monte_carlo";
  e.samples = samples;
  e.successes = successes;
  e.seed = seed;
  e.p_hat = static_cast<double>(successes) / static_cast<double>(samples);
  e.std_error = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(samples));
  e.ci95_lo = std::clamp(e.p_hat - 1.96 * e.std_error, 0.0, 1.0);
  e.ci95_hi = std::clamp(e.p_hat + 1.96 * e.std_error, 0.0, 1.0);
  return e;
}

ProbabilityEstimate point_estimate(double p, Method method, std::string label) {
  ProbabilityEstimate e;
  e.method = method;
  e.label = std::move(label);
  e.p_hat = p;
  e.ci95_lo = p;
  e.ci95_hi = p;
  return e;
}

SampleDraw draw_sample(const TriangleSpec& spec, std::uint64_t seed, std::uint64_t index) {
  const PhiloxKey key = philox_key(seed);
  for (std::uint32_t attempt = 0;; ++attempt) {
    const auto r = philox4x32_10(sample_counter(index, attempt, kJointStream), key);
    const double u_theta = to_unit_interval(r[2], r[3]);
    if (u_theta == 0.0) continue;
    const double u_x = to_unit_interval(r[0], r[1]);
    return {spec.base() * u_x - spec.half_base(), kPi * u_theta};
  }
}

double draw_direction(std::uint64_t seed, std::uint64_t index) {
  const PhiloxKey key = philox_key(seed);
  for (std::uint32_t attempt = 0;; ++attempt) {
    const auto r = philox4x32_10(sample_counter(index, attempt, kDirectionStream), key);
    const double u = to_unit_interval(r[0], r[1]);
    if (u != 0.0) return kPi * u;
  }
}

std::uint64_t count_successes(const GeneralProblem& prob, std::uint64_t samples,
                              std::uint64_t seed, int workers) {
  const auto hit = [&](std::uint64_t i) {
    const auto s = draw_sample(prob.spec(), seed, i);
    return side_hit(prob.spec(), BasePoint{s.x}, s.theta).distance > prob.threshold();
  };
  return count_blocked(samples, workers, hit);
}

std::uint64_t count_successes_serial(const GeneralProblem& prob, std::uint64_t samples,
                                     std::uint64_t seed) {
  std::uint64_t k = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto s = draw_sample(prob.spec(), seed, i);
    if (side_hit(prob.spec(), BasePoint{s.x}, s.theta).distance > prob.threshold()) ++k;
  }
  return k;
}

ProbabilityEstimate estimate(const GeneralProblem& prob, std::uint64_t samples, std::uint64_t seed,
                             int workers) {
  require_samples(samples);
  return binomial_estimate(count_successes(prob, samples, seed, workers), samples, seed);
}

ProbabilityEstimate estimate_serial(const GeneralProblem& prob, std::uint64_t samples,
                                    std::uint64_t seed) {
  require_samples(samples);
  return binomial_estimate(count_successes_serial(prob, samples, seed), samples, seed);
}

double empirical_limit_angle(const GeneralProblem& prob, BasePoint p, std::uint64_t samples,
                             std::uint64_t seed, int workers) {
  require_samples(samples);
  require_on_base(prob.spec(), p);
  const auto hit = [&](std::uint64_t i) {
    return side_hit(prob.spec(), p, draw_direction(seed, i)).distance > prob.threshold();
  };
  const std::uint64_t k = count_blocked(samples, workers, hit);
  return kPi * static_cast<double>(k) / static_cast<double>(samples);
}

double empirical_limit_angle_serial(const GeneralProblem& prob, BasePoint p,
                                    std::uint64_t samples, std::uint64_t seed) {
  require_samples(samples);
  require_on_base(prob.spec(), p);
  std::uint64_t k = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    if (side_hit(prob.spec(), p, draw_direction(seed, i)).distance > prob.threshold()) ++k;
  }
  return kPi * static_cast<double>(k) / static_cast<double>(samples);
}

}  // namespace chordprob
