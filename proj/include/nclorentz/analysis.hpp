#pragma once

// Batch analysis of one noncommutativity tensor: classification, small group
// construction and verification, canonical form, factorization of a sample
// element and the duality scan, collected into a JSON report.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "nclorentz/config.hpp"
#include "nclorentz/noncomm.hpp"

namespace nclorentz {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes of the analyze command.
enum class ExitCode : int { Pass = 0, CheckFailed = 1, InputError = 2 };

struct AnalysisConfig {
  std::filesystem::path input;
  std::filesystem::path report;
  std::optional<std::filesystem::path> csv;
  int scan_n = 360;
  int trials = 100;
  std::uint64_t seed = 42;
  Tolerances tolerances{};
  /// Emit the "generated_at" field. Off gives byte-identical reports.
  bool timestamp = true;
};

/// Parsed input: either a 4x4 "theta_matrix" or "epsilon"/"theta" 3-vectors.
struct AnalysisInput {
  ThetaTensor tensor;
  ThetaVectors vectors;
  bool from_matrix = false;
};

/// Throws ParseError for malformed documents and NotAntisymmetric for a
/// tensor that fails the antisymmetry check.
AnalysisInput parse_input(const std::string& text, const Tolerances& tol = kDefaultTolerances);

struct AnalysisReport {
  nlohmann::ordered_json json;
  bool passed = true;
  ExitCode exit_code = ExitCode::Pass;
  std::string summary;  // one line for stdout
};

/// Runs every check on an already parsed input. Deterministic in cfg.seed.
AnalysisReport analyze(const AnalysisInput& in, const AnalysisConfig& cfg);

/// Reads cfg.input, analyzes, writes cfg.report (and cfg.csv). Input errors are
/// turned into a report with exit code InputError rather than thrown.
AnalysisReport run_analysis(const AnalysisConfig& cfg);

}  // namespace nclorentz
