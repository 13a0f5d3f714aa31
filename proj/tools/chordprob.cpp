// chordprob: probability that a random chord through the base of an
// isosceles triangle is longer than a cutoff.
//
//   chordprob exact                      closed forms (unit configuration)
//   chordprob density --points 201       CSV of x,alpha across the base
//   chordprob integrate --tol 1e-12      adaptive quadrature
//   chordprob simulate --samples 1e7     Monte Carlo
//   chordprob general --base 2 ...       any isosceles triangle / cutoff
//   chordprob verify                     three-way consistency check
//
// Exit codes: 0 ok, 2 configuration error, 3 verification mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "chordprob/experiment.hpp"

namespace {

struct Overrides {
  std::optional<std::string> config_path;
  std::optional<double> base;
  std::optional<double> height;
  std::optional<double> threshold;
  std::optional<std::string> method;
  std::optional<double> samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<std::uint64_t> points;
  std::optional<std::string> format;
  std::optional<std::string> out;
  std::optional<double> inject_quadrature;
};

chordprob::ExperimentConfig resolve(const Overrides& o) {
  using chordprob::ConfigError;
  chordprob::ExperimentConfig c = o.config_path ? chordprob::load_config(*o.config_path)
                                                : chordprob::ExperimentConfig{};
  if (o.base) c.base = *o.base;
  if (o.height) c.height = *o.height;
  if (o.threshold) c.threshold = *o.threshold;
  if (o.method) c.method = chordprob::method_choice_from_string(*o.method);
  if (o.samples) {
    // Accepts 1e7 as well as 10000000.
    const double s = *o.samples;
    if (!(s >= 1.0 && s <= 1.8e19 && s == static_cast<double>(static_cast<std::uint64_t>(s)))) {
      throw ConfigError("--samples must be a positive integer");
    }
    c.samples = static_cast<std::uint64_t>(s);
  }
  if (o.seed) c.seed = *o.seed;
  if (o.tol) c.tolerance = *o.tol;
  if (o.points) c.density_points = *o.points;
  if (o.format) c.output_format = chordprob::output_format_from_string(*o.format);
  if (o.out) c.output_path = *o.out;
  return c;
}

int emit(const chordprob::CommandOutcome& outcome, const chordprob::ExperimentConfig& config) {
  std::ofstream file;
  if (config.output_path) {
    file.open(*config.output_path);
    if (!file) {
      std::cerr << "error: cannot write '" << *config.output_path << "'\n";
      return chordprob::kExitConfigError;
    }
  }
  std::ostream& out = config.output_path ? static_cast<std::ostream&>(file) : std::cout;
  if (outcome.density) chordprob::write_density_csv(out, *outcome.density);
  if (outcome.report) chordprob::write_report(out, *outcome.report, config.output_format);
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-chord probabilities in an isosceles triangle"};
  app.require_subcommand(1);
  app.fallthrough();

  Overrides o;
  app.add_option("--config", o.config_path, "JSON config file (flags override its values)");
  app.add_option("--base", o.base, "Base length AC (default 1)");
  app.add_option("--height", o.height, "Height OB (default 1)");
  app.add_option("--threshold", o.threshold, "Chord length cutoff (default 1)");
  app.add_option("--method", o.method, "exact|quadrature|montecarlo|all (default all)");
  app.add_option("--samples", o.samples, "Monte Carlo samples (default 1e6)");
  app.add_option("--seed", o.seed, "Monte Carlo seed (default 0)");
  app.add_option("--tol", o.tol, "Quadrature tolerance (default 1e-12)");
  app.add_option("--points", o.points, "Density grid points (default 201)");
  app.add_option("--format", o.format, "Report format json|csv (default json)");
  app.add_option("--out", o.out, "Output file (default standard output)");
  app.add_option("--inject-quadrature", o.inject_quadrature)->group("");

  for (const char* name : {"exact", "density", "integrate", "simulate", "general", "verify"}) {
    app.add_subcommand(name, "");
  }
  app.get_subcommand("exact")->description("Closed-form probability, both published forms");
  app.get_subcommand("density")->description("CSV profile x,alpha across the base");
  app.get_subcommand("integrate")->description("Adaptive-Simpson probability");
  app.get_subcommand("simulate")->description("Monte Carlo probability");
  app.get_subcommand("general")->description("Direction-set probability for any configuration");
  app.get_subcommand("verify")->description("Exact vs quadrature vs Monte Carlo");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? chordprob::kExitOk : chordprob::kExitConfigError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  chordprob::ExperimentConfig config;
  try {
    config = resolve(o);
  } catch (const chordprob::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return chordprob::kExitConfigError;
  }

  chordprob::VerifyHooks hooks;
  hooks.quadrature_override = o.inject_quadrature;

  const auto outcome = chordprob::run_command(command, config, hooks);
  if (outcome.exit_code == chordprob::kExitConfigError) {
    std::cerr << "error: " << outcome.message << '\n';
    return outcome.exit_code;
  }
  std::cerr << outcome.message << '\n';
  return emit(outcome, config);
}
