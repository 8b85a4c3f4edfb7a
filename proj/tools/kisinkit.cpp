#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "kisin/cli.hpp"
#include "kisin/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Kisin module model, extension and shape computations"};
  std::string scenario_path, params_path, out_path, profile;
  kisin::RunFlags flags;
  app.add_option("scenario", scenario_path, "Scenario record (" + std::string(kisin::kScenarioSchema) + ")");
  app.add_option("--params", params_path, "Parameter record replacing the scenario's params");
  app.add_option("--out", out_path, "Write the report here instead of standard output");
  app.add_option("--seed", flags.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--precision-step", flags.precision_step, "Factor between precision and its certificate")
      ->capture_default_str()
      ->check(CLI::Range(2, 16));
  app.add_option("--budget", flags.budget, "Instances per suite before it is marked inconclusive, 0 for no limit")
      ->capture_default_str();
  app.add_option("--profile", profile, "Suite profile for a sweep: desk, quick or selftest-fail");
  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  kisin::RunOutcome outcome;
  try {
    if (!params_path.empty()) flags.params = kisin::load_json(params_path);
    if (!profile.empty()) flags.profile = profile;
    if (!scenario_path.empty())
      outcome = kisin::run_scenario(kisin::load_json(scenario_path), flags);
    else if (flags.profile)
      outcome = kisin::run_profile(*flags.profile, flags);
    else
      throw kisin::InvalidInput("give a scenario file or --profile");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kisin::kExitError;
  }

  const std::string text = kisin::render_report(outcome.report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kisin::kExitError;
    }
    out << text;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "wall time " << secs << " s\n";
  return outcome.exit_code;
}
