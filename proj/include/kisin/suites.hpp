#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "kisin/models.hpp"

namespace kisin {

enum class SuiteStatus { Pass, Fail, Inconclusive };

std::string to_string(SuiteStatus s);

struct SuiteConfig {
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;  // maximal instances per suite, 0 for unlimited
  int precision_step = 2;
};

struct SuiteResult {
  std::string id;
  SuiteStatus status = SuiteStatus::Pass;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  nlohmann::json details = nlohmann::json::object();
};

struct SuiteInfo {
  std::string id;
  std::string summary;
  SuiteResult (*run)(const SuiteConfig&);
};

// The property suites in acceptance order, followed by the deliberately
// falsified fixture "selftest-fail".
const std::vector<SuiteInfo>& suite_registry();

// "desk": every acceptance suite; "quick": the fast ones; "selftest-fail":
// the fixture only. InvalidInput for anything else.
std::vector<std::string> profile_suites(const std::string& profile);

// Model pairs at p = 5 sharing template and characters that no partial
// line swap sequence should connect: one with f = 2, d = 4 and sixteen
// completions of a family with f = 4, d = 3.
std::vector<std::pair<Model, Model>> pls_counterexample_pairs();

// InvalidInput for an unknown id.
SuiteResult run_suite(const std::string& id, const SuiteConfig& config);

}  // namespace kisin
