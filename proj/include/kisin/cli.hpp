#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace kisin {

inline constexpr const char* kScenarioSchema = "kisinkit.scenario/1";
inline constexpr const char* kReportSchema = "kisinkit.report/1";
inline constexpr const char* kParamsSchema = "kisinkit.params/1";
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode { kExitOk = 0, kExitError = 1, kExitViolation = 2 };

struct RunFlags {
  std::optional<nlohmann::json> params;  // replaces the scenario's params
  std::uint64_t seed = 1;
  int precision_step = 2;
  std::uint64_t budget = 0;  // 0 for unlimited
  std::optional<std::string> profile;
};

struct RunOutcome {
  nlohmann::json report;
  int exit_code = kExitOk;
};

// Reads a JSON file; SchemaError naming the file on parse failure.
nlohmann::json load_json(const std::string& path);

// Validates the scenario (unknown fields are rejected) and dispatches to
// the task. Throws SchemaError or InvalidInput on malformed input.
RunOutcome run_scenario(const nlohmann::json& scenario, const RunFlags& flags);

// Sweep over a profile without a scenario file.
RunOutcome run_profile(const std::string& profile, const RunFlags& flags);

// Pretty-printed with sorted keys and a trailing newline.
std::string render_report(const nlohmann::json& report);

}  // namespace kisin
