// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "chordprob/density.hpp"
#include "chordprob/direction_set.hpp"
#include "chordprob/exact.hpp"
#include "chordprob/experiment.hpp"
#include "chordprob/geometry.hpp"
#include "chordprob/monte_carlo.hpp"
#include "chordprob/quadrature.hpp"

#ifndef CHORDPROB_CLI
#define CHORDPROB_CLI "chordprob"
#endif

using namespace chordprob;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double round4(double v) { return std::round(v * 1e4) / 1e4; }

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + CHORDPROB_CLI + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void exact_value(Outcome& o) {
  const double a = p_exact_arctan_form();
  const double b = p_exact_phi_form();
  o.detail << "arctan form " << a << ", phi form " << b << ", |diff| " << std::abs(a - b);
  o.require(std::abs(round4(a) - 0.0162) < 1e-12, "arctan form rounds to 0.0162");
  o.require(std::abs(round4(b) - 0.0162) < 1e-12, "phi form rounds to 0.0162");
  o.require(std::abs(a - b) < 1e-14, "forms agree to 1e-14");
}

void arctan_identity(Outcome& o) {
  const auto c = arctan_identity_check();
  o.detail << "residual " << c.residual << ", tangent route " << c.tangent_residual
           << ", argument route " << c.argument_residual << ", apex " << c.apex_residual;
  o.require(std::abs(arctan_identity_residual()) <= 1e-15, "atan(2) - atan(1/3) - pi/4");
  o.require(std::abs(c.tangent_residual) <= 1e-15, "tangent-addition route");
  o.require(std::abs(c.argument_residual) <= 1e-15, "complex-argument route");
  o.require(std::abs(c.apex_residual) <= 1e-15, "arg(2+4i) = atan(2)");
  o.require(c.product_residual == 0.0, "(3+i)(1+i) = 2+4i");
}

void antiderivatives(Outcome& o) {
  const double h = 1e-6;
  double worst = 0.0;
  const std::pair<double (*)(double), double (*)(double)> pairs[] = {
      {i1, i1_integrand}, {i2, i2_integrand}, {i3, i3_integrand}, {i4, i4_integrand}};
  for (const auto& [f, df] : pairs) {
    for (int k = 1; k <= 100; ++k) {
      const double x = -0.5 + k / 101.0;
      worst = std::max(worst, std::abs((f(x + h) - f(x - h)) / (2 * h) - df(x)));
    }
  }
  const double closed = 2.0 * std::atan(1.0 / 3.0) + kPi / 2.0 + 1.0 - std::sqrt(5.0);
  o.detail << "max FD deviation " << worst << ", bracket " << bracket_definite() << " vs "
           << closed;
  o.require(worst < 1e-6, "finite differences within 1e-6");
  o.require(std::abs(bracket_definite() - closed) < 1e-12, "bracket closed form");
  o.require(std::abs(bracket_definite() - 0.9782294) < 1e-7, "bracket ~ 0.9782294");
}

void quadrature_agreement(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto q = probability_by_quadrature(1e-12);
  const double secs = seconds_since(t0);
  const double err = std::abs(q.probability - p_exact_phi_form());
  o.detail << "p " << q.probability << ", |err| " << err << ", " << q.evaluations
           << " evaluations, " << secs << " s";
  o.require(q.converged, "converged");
  o.require(err < 1e-10, "within 1e-10 of exact");
  o.require(q.evaluations < 100000, "fewer than 1e5 evaluations");
  o.require(secs < 1.0, "under one second");
}

void general_equivalence(Outcome& o) {
  const GeneralProblem unit;
  double worst = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double x = -0.5 + i / 100.0;
    worst = std::max(worst, std::abs(measure(direction_set(unit, BasePoint{x})) -
                                     limit_angle(BasePoint{x})));
  }
  const auto g = probability_general(unit, 1e-10);
  const double err = std::abs(g.probability - p_exact_phi_form());
  o.detail << "max |measure - alpha| " << worst << ", general p " << g.probability << " (|err| "
           << err << ")";
  o.require(worst < 1e-9, "pointwise equivalence within 1e-9");
  o.require(err < 1e-8, "probability within 1e-8");
}

void monte_carlo(Outcome& o) {
  const GeneralProblem unit;
  const auto t0 = std::chrono::steady_clock::now();
  const auto many = estimate(unit, 10'000'000, 2024);
  const double secs = seconds_since(t0);
  const auto single = estimate(unit, 10'000'000, 2024, 1);
  const double err = std::abs(many.p_hat - p_exact_phi_form());
  o.detail << "p_hat " << many.p_hat << " (|err| " << err << ", se " << many.std_error << "), "
           << secs << " s; 1-worker p_hat " << single.p_hat;
  o.require(err < 1.6e-4, "within 1.6e-4 (4 sigma)");
  o.require(single.p_hat == many.p_hat && single.successes == many.successes,
            "identical across worker counts");
  for (int workers : {2, 4, 7}) {
    o.require(estimate(unit, 1'000'003, 99, workers) == estimate_serial(unit, 1'000'003, 99),
              "parallel == serial at " + std::to_string(workers) + " workers");
  }
  o.require(secs < 30.0, "desk-scale runtime");
}

void density_profile_check(Outcome& o) {
  const auto p = density_profile(GeneralProblem{}, 201);
  const double expected_end = 3.0 * std::atan(2.0) - kPi;
  double asym = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    asym = std::max(asym, std::abs(p.alpha[i] - p.alpha[p.size() - 1 - i]));
  }
  const double mid = p.alpha[100];
  o.detail << "alpha(0) " << mid << ", alpha(-1/2) " << p.alpha.front() << ", alpha(1/2) "
           << p.alpha.back() << ", max asymmetry " << asym;
  o.require(p.x[100] == 0.0, "grid contains 0");
  o.require(std::abs(mid) < 1e-12, "alpha(0) = 0");
  o.require(std::abs(p.alpha.front() - expected_end) < 1e-12, "alpha(-1/2)");
  o.require(std::abs(p.alpha.back() - expected_end) < 1e-12, "alpha(1/2)");
  o.require(std::abs(expected_end - 0.1798535) < 1e-7, "3 atan(2) - pi ~ 0.1798535");
  o.require(asym <= 1e-15, "symmetric to 1e-15");
}

void cli_contract(Outcome& o) {
  const int verify_rc = run_cli("verify");
  const int perturbed_rc = run_cli("verify --inject-quadrature 0.02");
  const std::string csv_path = "acceptance_density.csv";
  const int density_rc = run_cli("density --out " + csv_path);

  bool round_trip = false;
  std::ifstream in(csv_path);
  if (in) {
    const auto parsed = read_density_csv(in);
    const auto direct = density_profile(GeneralProblem{}, 201);
    round_trip = parsed == direct;
    std::ostringstream again;
    write_density_csv(again, parsed);
    std::ifstream reread(csv_path);
    std::stringstream original;
    original << reread.rdbuf();
    round_trip = round_trip && again.str() == original.str();
  }
  std::remove(csv_path.c_str());
  o.detail << "verify exit " << verify_rc << ", perturbed exit " << perturbed_rc
           << ", density exit " << density_rc << ", CSV round trip "
           << (round_trip ? "exact" : "MISMATCH");
  o.require(verify_rc == kExitOk, "verify defaults exit 0");
  o.require(perturbed_rc == kExitVerifyFailed, "perturbed quadrature exits 3");
  o.require(density_rc == kExitOk && round_trip, "density CSV round-trips");
}

}  // namespace

int main() {
  std::cout.precision(17);
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"1 exact value", exact_value},
      {"2 arctan identity", arctan_identity},
      {"3 antiderivatives", antiderivatives},
      {"4 quadrature agreement", quadrature_agreement},
      {"5 general-engine equivalence", general_equivalence},
      {"6 monte carlo", monte_carlo},
      {"7 density profile", density_profile_check},
      {"8 CLI contract", cli_contract},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    o.detail.precision(10);
    try {
      check(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail.str() << '\n';
    if (!o.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : "criteria failed: " + std::to_string(failures))
            << '\n';
  return failures == 0 ? 0 : 1;
}
