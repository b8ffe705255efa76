// nclorentz: residual Lorentz symmetry analyzer for a noncommutativity tensor.
//
//   nclorentz analyze --input theta.json --report report.json [--csv scan.csv]
//                     [--scan-n 360] [--trials 100] [--seed 42]

#include <iostream>

#include <CLI11.hpp>

#include "nclorentz/analysis.hpp"
#include "nclorentz/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Residual Lorentz symmetry of noncommutative electrodynamics"};
  app.set_version_flag("--version", nclorentz::kVersion);
  app.require_subcommand(1);

  nclorentz::AnalysisConfig cfg;
  std::string input, report, csv;
  bool no_timestamp = false;
  auto* analyze = app.add_subcommand("analyze", "Classify theta, build and verify its small group, scan dual rotations");
  analyze->add_option("--input", input, "JSON file with theta_matrix or epsilon/theta")->required();
  analyze->add_option("--report", report, "JSON report to write")->required();
  analyze->add_option("--csv", csv, "Write the duality scan table as CSV");
  analyze->add_option("--scan-n", cfg.scan_n, "Duality scan resolution")->capture_default_str()->check(CLI::Range(8, 1 << 24));
  analyze->add_option("--trials", cfg.trials, "Random trials per check")->capture_default_str()->check(CLI::PositiveNumber);
  analyze->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  analyze->add_option("--classify-tol", cfg.tolerances.classify, "Relative classification tolerance")
      ->capture_default_str()
      ->check(CLI::Range(1e-300, 1e-3));
  analyze->add_flag("--no-timestamp", no_timestamp, "Omit generated_at from the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(nclorentz::ExitCode::InputError);
  }

  cfg.input = input;
  cfg.report = report;
  if (!csv.empty()) cfg.csv = csv;
  cfg.timestamp = !no_timestamp;

  try {
    const nclorentz::AnalysisReport rep = nclorentz::run_analysis(cfg);
    if (rep.exit_code == nclorentz::ExitCode::InputError) {
      std::cerr << "nclorentz: " << rep.summary << '\n';
    } else {
      std::cout << rep.summary << '\n';
    }
    return static_cast<int>(rep.exit_code);
  } catch (const nclorentz::Error& e) {
    std::cerr << "nclorentz: " << e.what() << '\n';
    return static_cast<int>(nclorentz::ExitCode::CheckFailed);
  }
}
