#include "chordprob/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "chordprob/errors.hpp"
#include "chordprob/exact.hpp"
#include "chordprob/quadrature.hpp"

namespace chordprob {

using nlohmann::json;

namespace {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt4(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

CommandOutcome config_failure(const std::string& message) {
  CommandOutcome out;
  out.exit_code = kExitConfigError;
  out.message = message;
  return out;
}

ExperimentReport new_report(const std::string& command, const ExperimentConfig& config) {
  ExperimentReport r;
  r.command = command;
  r.config = config;
  return r;
}

ProbabilityEstimate quadrature_estimate(const QuadratureResult& q, std::string label) {
  return point_estimate(q.probability, Method::Quadrature, std::move(label));
}

QuadratureResult integrate_config(const ExperimentConfig& config, std::string& label) {
  if (config.is_unit()) {
    label = "quadrature_closed_form";
    return probability_by_quadrature(config.tolerance);
  }
  label = "quadrature_direction_set";
  return probability_general(config.problem(), config.tolerance);
}

}  // namespace

const char* to_string(MethodChoice m) {
  switch (m) {
    case MethodChoice::Exact: return "exact";
    case MethodChoice::Quadrature: return "quadrature";
    case MethodChoice::MonteCarlo: return "montecarlo";
    case MethodChoice::All: return "all";
  }
  return "?";
}

const char* to_string(OutputFormat f) { return f == OutputFormat::Json ? "json" : "csv"; }

MethodChoice method_choice_from_string(const std::string& s) {
  if (s == "exact") return MethodChoice::Exact;
  if (s == "quadrature") return MethodChoice::Quadrature;
  if (s == "montecarlo") return MethodChoice::MonteCarlo;
  if (s == "all") return MethodChoice::All;
  throw ConfigError("unknown method '" + s + "' (expected exact|quadrature|montecarlo|all)");
}

OutputFormat output_format_from_string(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw ConfigError("unknown output format '" + s + "' (expected json|csv)");
}

void ExperimentConfig::validate() const {
  if (!(std::isfinite(base) && base > 0.0)) throw ConfigError("base must be positive");
  if (!(std::isfinite(height) && height > 0.0)) throw ConfigError("height must be positive");
  if (!(std::isfinite(threshold) && threshold >= 0.0)) {
    throw ConfigError("threshold must be nonnegative");
  }
  if (samples < 1) throw ConfigError("samples must be at least 1");
  if (!(std::isfinite(tolerance) && tolerance > 0.0)) {
    throw ConfigError("tolerance must be positive");
  }
  if (density_points < 2) throw ConfigError("density_points must be at least 2");
}

GeneralProblem ExperimentConfig::problem() const {
  return GeneralProblem(TriangleSpec(base, height), threshold);
}

// ---- JSON -----------------------------------------------------------------

void to_json(json& j, const ExperimentConfig& c) {
  j = json{{"triangle", {{"base", c.base}, {"height", c.height}}},
           {"threshold", c.threshold},
           {"method", to_string(c.method)},
           {"samples", c.samples},
           {"seed", c.seed},
           {"tolerance", c.tolerance},
           {"density_points", c.density_points},
           {"output_format", to_string(c.output_format)},
           {"output_path", c.output_path ? json(*c.output_path) : json(nullptr)}};
}

void from_json(const json& j, ExperimentConfig& c) { c = config_from_json(j, c); }

ExperimentConfig config_from_json(const json& j, ExperimentConfig c) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  try {
    if (j.contains("triangle")) {
      const json& t = j.at("triangle");
      if (t.contains("base")) c.base = t.at("base").get<double>();
      if (t.contains("height")) c.height = t.at("height").get<double>();
    }
    if (j.contains("threshold")) c.threshold = j.at("threshold").get<double>();
    if (j.contains("method")) c.method = method_choice_from_string(j.at("method").get<std::string>());
    if (j.contains("samples")) c.samples = j.at("samples").get<std::uint64_t>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("tolerance")) c.tolerance = j.at("tolerance").get<double>();
    if (j.contains("density_points")) c.density_points = j.at("density_points").get<std::uint64_t>();
    if (j.contains("output_format")) {
      c.output_format = output_format_from_string(j.at("output_format").get<std::string>());
    }
    if (j.contains("output_path")) {
      const json& p = j.at("output_path");
      c.output_path = p.is_null() ? std::nullopt : std::optional(p.get<std::string>());
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  return config_from_json(j);
}

void to_json(json& j, const ProbabilityEstimate& e) {
  j = json{{"method", to_string(e.method)},
           {"label", e.label},
           {"p_hat", e.p_hat},
           {"samples", e.samples},
           {"successes", e.successes},
           {"std_error", e.std_error},
           {"ci95", {e.ci95_lo, e.ci95_hi}},
           {"seed", e.seed}};
}

void from_json(const json& j, ProbabilityEstimate& e) {
  e.method = method_from_string(j.at("method").get<std::string>());
  e.label = j.at("label").get<std::string>();
  e.p_hat = j.at("p_hat").get<double>();
  e.samples = j.at("samples").get<std::uint64_t>();
  e.successes = j.at("successes").get<std::uint64_t>();
  e.std_error = j.at("std_error").get<double>();
  e.ci95_lo = j.at("ci95").at(0).get<double>();
  e.ci95_hi = j.at("ci95").at(1).get<double>();
  e.seed = j.at("seed").get<std::uint64_t>();
}

void to_json(json& j, const ExperimentReport& r) {
  j = json{{"command", r.command},
           {"config", r.config},
           {"estimates", r.estimates},
           {"agreement",
            {{"max_abs_difference", r.agreement.max_abs_difference},
             {"within_tolerance", r.agreement.within_tolerance}}},
           {"timing", r.timing_ms},
           {"tool_version", r.tool_version}};
}

void from_json(const json& j, ExperimentReport& r) {
  r.command = j.at("command").get<std::string>();
  r.config = config_from_json(j.at("config"));
  r.estimates = j.at("estimates").get<std::vector<ProbabilityEstimate>>();
  r.agreement.max_abs_difference = j.at("agreement").at("max_abs_difference").get<double>();
  r.agreement.within_tolerance = j.at("agreement").at("within_tolerance").get<bool>();
  r.timing_ms = j.at("timing").get<std::map<std::string, double>>();
  r.tool_version = j.at("tool_version").get<std::string>();
}

std::string report_to_json_string(const ExperimentReport& report) {
  return json(report).dump(2);
}

void write_report(std::ostream& out, const ExperimentReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) {
    out << report_to_json_string(report) << '\n';
    return;
  }
  out << "command,method,label,p_hat,samples,successes,std_error,ci95_lo,ci95_hi,seed\n";
  for (const auto& e : report.estimates) {
    out << report.command << ',' << to_string(e.method) << ',' << e.label << ',' << fmt17(e.p_hat)
        << ',' << e.samples << ',' << e.successes << ',' << fmt17(e.std_error) << ','
        << fmt17(e.ci95_lo) << ',' << fmt17(e.ci95_hi) << ',' << e.seed << '\n';
  }
}

// ---- commands -------------------------------------------------------------

CommandOutcome run_exact(const ExperimentConfig& config) {
  try {
    config.validate();
  } catch (const ConfigError& e) {
    return config_failure(e.what());
  }
  if (!config.is_unit()) {
    return config_failure(
        "exact: a closed form exists only for base = height = threshold = 1");
  }
  ExperimentReport report = new_report("exact", config);
  Stopwatch clock;
  const double arctan_form = p_exact_arctan_form();
  const double phi_form = p_exact_phi_form();
  report.timing_ms["exact"] = clock.elapsed_ms();
  report.estimates.push_back(point_estimate(arctan_form, Method::Exact, "arctan_form"));
  report.estimates.push_back(point_estimate(phi_form, Method::Exact, "phi_form"));
  report.agreement.max_abs_difference = std::abs(arctan_form - phi_form);
  report.agreement.within_tolerance = report.agreement.max_abs_difference < kClosedFormAgreement;

  CommandOutcome out;
  out.message = "p = " + fmt4(phi_form) + "  arctan form " + fmt17(arctan_form) + "  phi form " +
                fmt17(phi_form) + "  difference " + fmt17(report.agreement.max_abs_difference);
  out.report = std::move(report);
  return out;
}

CommandOutcome run_density(const ExperimentConfig& config) {
  try {
    config.validate();
  } catch (const ConfigError& e) {
    return config_failure(e.what());
  }
  CommandOutcome out;
  out.density = density_profile(config.problem(), static_cast<std::size_t>(config.density_points));
  out.message = "density: " + std::to_string(out.density->size()) + " points";
  return out;
}

CommandOutcome run_integrate(const ExperimentConfig& config) {
  try {
    config.validate();
  } catch (const ConfigError& e) {
    return config_failure(e.what());
  }
  ExperimentReport report = new_report("integrate", config);
  Stopwatch clock;
  std::string label;
  const QuadratureResult q = integrate_config(config, label);
  report.timing_ms["quadrature"] = clock.elapsed_ms();
  report.estimates.push_back(quadrature_estimate(q, label));
  report.agreement.within_tolerance = q.converged;

  CommandOutcome out;
  out.message = "quadrature p = " + fmt17(q.probability) + " (" + std::to_string(q.evaluations) +
                " evaluations" + (q.converged ? ")" : ", NOT converged)");
  out.report = std::move(report);
  return out;
}

CommandOutcome run_simulate(const ExperimentConfig& config) {
  try {
    config.validate();
  } catch (const ConfigError& e) {
    return config_failure(e.what());
  }
  ExperimentReport report = new_report("simulate", config);
  Stopwatch clock;
  const ProbabilityEstimate mc = estimate(config.problem(), config.samples, config.seed);
  report.timing_ms["monte_carlo"] = clock.elapsed_ms();
  report.estimates.push_back(mc);

  CommandOutcome out;
  out.message = "monte carlo p = " + fmt17(mc.p_hat) + " +- " + fmt17(mc.std_error) + " (" +
                std::to_string(mc.samples) + " samples)";
  out.report = std::move(report);
  return out;
}

CommandOutcome run_general(const ExperimentConfig& config) {
  try {
    config.validate();
  } catch (const ConfigError& e) {
    return config_failure(e.what());
  }
  const GeneralProblem prob = config.problem();
  ExperimentReport report = new_report("general", config);

  Stopwatch quad_clock;
  const QuadratureResult q = probability_general(prob, config.tolerance);
  report.timing_ms["quadrature"] = quad_clock.elapsed_ms();
  report.estimates.push_back(quadrature_estimate(q, "quadrature_direction_set"));
  report.agreement.within_tolerance = q.converged;

  std::string message = "general p = " + fmt17(q.probability);
  if (config.method == MethodChoice::All || config.method == MethodChoice::MonteCarlo) {
    Stopwatch mc_clock;
    const ProbabilityEstimate mc = estimate(prob, config.samples, config.seed);
    report.timing_ms["monte_carlo"] = mc_clock.elapsed_ms();
    report.estimates.push_back(mc);
    const double diff = std::abs(mc.p_hat - q.probability);
    const double sigma =
        std::sqrt(q.probability * (1.0 - q.probability) / static_cast<double>(mc.samples));
    report.agreement.max_abs_difference = diff;
    report.agreement.within_tolerance =
        q.converged && diff <= kMonteCarloSigmas * sigma + kQuadratureAgreement;
    message += "  monte carlo " + fmt17(mc.p_hat);
  }

  CommandOutcome out;
  out.message = std::move(message);
  out.report = std::move(report);
  return out;
}

CommandOutcome run_verify(const ExperimentConfig& config, const VerifyHooks& hooks) {
  try {
    config.validate();
  } catch (const ConfigError& e) {
    return config_failure(e.what());
  }
  if (!config.is_unit()) {
    return config_failure("verify: requires base = height = threshold = 1");
  }
  ExperimentReport report = new_report("verify", config);

  Stopwatch exact_clock;
  const double exact = p_exact_phi_form();
  report.timing_ms["exact"] = exact_clock.elapsed_ms();
  report.estimates.push_back(point_estimate(exact, Method::Exact, "phi_form"));

  Stopwatch quad_clock;
  const QuadratureResult q = probability_by_quadrature(config.tolerance);
  report.timing_ms["quadrature"] = quad_clock.elapsed_ms();
  ProbabilityEstimate quad = quadrature_estimate(q, "quadrature_closed_form");
  if (hooks.quadrature_override) {
    quad = point_estimate(*hooks.quadrature_override, Method::Quadrature, "quadrature_override");
  }
  report.estimates.push_back(quad);

  Stopwatch mc_clock;
  const ProbabilityEstimate mc = estimate(config.problem(), config.samples, config.seed);
  report.timing_ms["monte_carlo"] = mc_clock.elapsed_ms();
  report.estimates.push_back(mc);

  // Binomial spread around the exact value; stays meaningful when few or no
  // successes are observed.
  const double sigma = std::sqrt(exact * (1.0 - exact) / static_cast<double>(mc.samples));
  const double quad_diff = std::abs(quad.p_hat - exact);
  const double mc_diff = std::abs(mc.p_hat - exact);
  const bool quad_ok = quad_diff < kQuadratureAgreement;
  const bool mc_ok = mc_diff < kMonteCarloSigmas * sigma;
  report.agreement.max_abs_difference = std::max(quad_diff, mc_diff);
  report.agreement.within_tolerance = quad_ok && mc_ok;

  CommandOutcome out;
  out.exit_code = report.agreement.within_tolerance ? kExitOk : kExitVerifyFailed;
  out.message = std::string(out.exit_code == kExitOk ? "verify OK" : "verify FAILED") +
                ": exact " + fmt17(exact) + "  quadrature " + fmt17(quad.p_hat) + " (|d| " +
                fmt17(quad_diff) + (quad_ok ? ")" : " > 1e-8)") + "  monte carlo " +
                fmt17(mc.p_hat) + " (|d| " + fmt17(mc_diff) + (mc_ok ? "" : " >") + " 4 sigma " +
                fmt17(kMonteCarloSigmas * sigma) + ")";
  out.report = std::move(report);
  return out;
}

CommandOutcome run_command(const std::string& command, const ExperimentConfig& config,
                           const VerifyHooks& hooks) {
  try {
    if (command == "exact") return run_exact(config);
    if (command == "density") return run_density(config);
    if (command == "integrate") return run_integrate(config);
    if (command == "simulate") return run_simulate(config);
    if (command == "general") return run_general(config);
    if (command == "verify") return run_verify(config, hooks);
  } catch (const InvalidTriangle& e) {
    return config_failure(e.what());
  }
  return config_failure("unknown command '" + command + "'");
}

}  // namespace chordprob
