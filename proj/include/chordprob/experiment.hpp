#pragma once

// Experiment driver behind the command-line tool: configuration, the six
// commands, and the JSON/CSV report formats.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "chordprob/density.hpp"
#include "chordprob/monte_carlo.hpp"

namespace chordprob {

inline constexpr const char* kToolVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Quadrature must match the closed form to this absolute tolerance.
inline constexpr double kQuadratureAgreement = 1e-8;
/// Monte Carlo must match within this many standard errors.
inline constexpr double kMonteCarloSigmas = 4.0;
/// The two closed forms must match to this absolute tolerance.
inline constexpr double kClosedFormAgreement = 1e-14;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MethodChoice { Exact, Quadrature, MonteCarlo, All };
enum class OutputFormat { Json, Csv };

const char* to_string(MethodChoice m);
const char* to_string(OutputFormat f);
MethodChoice method_choice_from_string(const std::string& s);
OutputFormat output_format_from_string(const std::string& s);

struct ExperimentConfig {
  double base = 1.0;
  double height = 1.0;
  double threshold = 1.0;
  MethodChoice method = MethodChoice::All;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  double tolerance = 1e-12;
  std::uint64_t density_points = 201;
  OutputFormat output_format = OutputFormat::Json;
  std::optional<std::string> output_path;

  /// Throws ConfigError describing the first invalid field.
  void validate() const;
  bool is_unit() const { return base == 1.0 && height == 1.0 && threshold == 1.0; }
  GeneralProblem problem() const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

struct Agreement {
  double max_abs_difference = 0.0;
  bool within_tolerance = true;

  friend bool operator==(const Agreement&, const Agreement&) = default;
};

struct ExperimentReport {
  std::string command;
  ExperimentConfig config;
  std::vector<ProbabilityEstimate> estimates;
  Agreement agreement;
  std::map<std::string, double> timing_ms;
  std::string tool_version = kToolVersion;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

void to_json(nlohmann::json& j, const ExperimentConfig& c);
void from_json(const nlohmann::json& j, ExperimentConfig& c);
void to_json(nlohmann::json& j, const ProbabilityEstimate& e);
void from_json(const nlohmann::json& j, ProbabilityEstimate& e);
void to_json(nlohmann::json& j, const ExperimentReport& r);
void from_json(const nlohmann::json& j, ExperimentReport& r);

/// Reads a config file; missing fields keep their defaults. Throws ConfigError.
ExperimentConfig load_config(const std::string& path);
/// Overlays the fields present in `j` onto `base`. Throws ConfigError.
ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base = {});

struct CommandOutcome {
  int exit_code = kExitOk;
  /// One-line human summary (or the error message when exit_code != 0).
  std::string message;
  std::optional<ExperimentReport> report;
  std::optional<DensityProfile> density;
};

/// Test hooks for the verification harness.
struct VerifyHooks {
  /// Replaces the quadrature probability before comparison.
  std::optional<double> quadrature_override;
};

CommandOutcome run_exact(const ExperimentConfig& config);
CommandOutcome run_density(const ExperimentConfig& config);
CommandOutcome run_integrate(const ExperimentConfig& config);
CommandOutcome run_simulate(const ExperimentConfig& config);
CommandOutcome run_general(const ExperimentConfig& config);
CommandOutcome run_verify(const ExperimentConfig& config, const VerifyHooks& hooks = {});

/// Dispatches by command name; unknown names give kExitConfigError.
CommandOutcome run_command(const std::string& command, const ExperimentConfig& config,
                           const VerifyHooks& hooks = {});

void write_report(std::ostream& out, const ExperimentReport& report, OutputFormat format);
std::string report_to_json_string(const ExperimentReport& report);

}  // namespace chordprob
