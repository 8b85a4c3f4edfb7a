#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "kisin/cli.hpp"
#include "kisin/errors.hpp"

using namespace kisin;
using nlohmann::json;

namespace {

const std::string kScenarios = KISIN_SCENARIO_DIR;
const std::string kGolden = KISIN_GOLDEN_DIR;

json scenario(const std::string& name) { return load_json(kScenarios + "/" + name); }

json sweep_scenario(const json& payload) {
  return {{"schema", kScenarioSchema}, {"params", {{"p", 3}, {"f", 1}, {"m", 1}, {"N", 4}}}, {"task", "sweep"},
          {"payload", payload}};
}

std::string schema_message(const json& s, const RunFlags& flags = {}) {
  try {
    run_scenario(s, flags);
  } catch (const SchemaError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Cli, ModelsTrivial) {
  const auto out = run_scenario(scenario("models_trivial.json"), {});
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.report["results"]["model_count"], 1);
  EXPECT_EQ(out.report["results"]["c1"], true);
  EXPECT_EQ(out.report["schema"], kReportSchema);
}

TEST(Cli, MatchesGoldenReport) {
  std::ifstream in(kGolden + "/models_trivial.report.json", std::ios::binary);
  std::stringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(render_report(run_scenario(scenario("models_trivial.json"), {}).report), golden.str());
}

TEST(Cli, ReportsAreDeterministic) {
  for (const char* name : {"pls_counterexample.json", "ext_rank1.json", "conditions_weight.json", "sweep_quick.json"}) {
    const auto a = render_report(run_scenario(scenario(name), {}).report);
    const auto b = render_report(run_scenario(scenario(name), {}).report);
    EXPECT_EQ(a, b) << name;
  }
}

TEST(Cli, SeedIsEchoed) {
  RunFlags flags;
  flags.seed = 77;
  const auto out = run_scenario(scenario("shape_d2_f3.json"), flags);
  EXPECT_EQ(out.report["provenance"]["seed"], 77);
}

TEST(Cli, PlsCounterexampleStaysApart) {
  const auto out = run_scenario(scenario("pls_counterexample.json"), {});
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.report["results"]["pair"]["linked"], false);
  // A third model with the same characters sits in its own component.
  EXPECT_EQ(out.report["results"]["component_count"], 3);
  EXPECT_EQ(out.report["results"]["c3"], false);
}

TEST(Cli, ShapeVerifyExhaustive) {
  const auto out = run_scenario(scenario("shape_d2_f3.json"), {});
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.report["results"]["counterexample_count"], 0);
  EXPECT_EQ(out.report["results"]["gl_order"], 48);
}

TEST(Cli, ExtCarriesCertificates) {
  const auto out = run_scenario(scenario("ext_rank1.json"), {});
  EXPECT_EQ(out.report["results"]["dimension"], 1);
  EXPECT_EQ(out.report["provenance"]["certificates"]["ext_precision"], 24);
  EXPECT_EQ(out.report["provenance"]["certificates"]["ext_check_precision"], 48);
  EXPECT_EQ(out.report["results"]["upper_bound"]["hypothesis"], false);

  auto s = scenario("ext_rank1.json");
  s["payload"]["quot"]["t"] = {{3}};
  s["payload"]["sub"]["t"] = {{2}};
  const auto ok = run_scenario(s, {});
  EXPECT_EQ(ok.report["results"]["upper_bound"]["hypothesis"], true);
  EXPECT_EQ(ok.report["results"]["upper_bound"]["holds"], true);
  EXPECT_EQ(ok.exit_code, kExitOk);
}

TEST(Cli, ConditionsGateFields) {
  const auto r = run_scenario(scenario("conditions_weight.json"), {}).report["results"];
  for (const char* k : {"c1", "c2a", "c2b", "corollary_cases", "application_cases", "serre_bound_ok", "theorem_main_gate"})
    EXPECT_TRUE(r.contains(k)) << k;
  EXPECT_EQ(r["template"], json({{0, 2, 4}}));
}

TEST(Cli, EmptySweepPasses) {
  const auto out = run_scenario(sweep_scenario({{"suites", json::array()}}), {});
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_TRUE(out.report["results"]["suites"].empty());
  EXPECT_EQ(out.report["results"]["all_passed"], true);
}

TEST(Cli, FalsifiedFixtureExitsTwo) {
  EXPECT_EQ(run_scenario(scenario("sweep_selftest.json"), {}).exit_code, kExitViolation);
  RunFlags flags;
  flags.profile = "selftest-fail";
  EXPECT_EQ(run_scenario(sweep_scenario({{"suites", json::array()}}), flags).exit_code, kExitViolation);
  EXPECT_EQ(run_profile("selftest-fail", {}).exit_code, kExitViolation);
}

TEST(Cli, BudgetMarksInconclusive) {
  RunFlags flags;
  flags.budget = 5;
  const auto out = run_scenario(sweep_scenario({{"suites", {"alpha-recurrence"}}}), flags);
  EXPECT_EQ(out.exit_code, kExitOk);
  const auto& s = out.report["results"]["suites"][0];
  EXPECT_EQ(s["status"], "inconclusive");
  EXPECT_EQ(s["checked"], 5);
  EXPECT_EQ(s["details"]["budget_exhausted"], true);
  EXPECT_EQ(out.report["results"]["all_passed"], false);
}

TEST(Cli, RejectsUnknownFields) {
  auto s = scenario("models_trivial.json");
  s["extra"] = 1;
  EXPECT_NE(schema_message(s).find("/extra: unknown field"), std::string::npos);
  s = scenario("models_trivial.json");
  s["payload"]["colour"] = "red";
  EXPECT_NE(schema_message(s).find("/payload/colour: unknown field"), std::string::npos);
  s = scenario("ext_rank1.json");
  s["payload"]["sub"]["entries"] = {{{"s", 0}, {"i", 0}, {"j", 1}, {"coeffs", {1}}, {"x", 0}}};
  EXPECT_NE(schema_message(s).find("/payload/sub/entries/0/x"), std::string::npos);
}

TEST(Cli, RejectsBadRecords) {
  auto s = scenario("models_trivial.json");
  s["schema"] = "kisinkit.scenario/0";
  EXPECT_NE(schema_message(s).find("/schema"), std::string::npos);
  s = scenario("models_trivial.json");
  s["task"] = "plot";
  EXPECT_NE(schema_message(s).find("/task"), std::string::npos);
  s = scenario("models_trivial.json");
  s["params"]["f"] = 2;  // f does not divide m
  EXPECT_NE(schema_message(s).find("/params"), std::string::npos);
  s = scenario("models_trivial.json");
  s["payload"]["template"] = {{2, 2}};
  EXPECT_NE(schema_message(s).find("/payload/template"), std::string::npos);
  s = scenario("models_trivial.json");
  s["payload"]["chars"] = {{{"e", 0}, {"a", 1}}};
  EXPECT_NE(schema_message(s).find("either chars or rows"), std::string::npos);
  EXPECT_NE(schema_message(sweep_scenario({{"suites", {"nope"}}})).find("/payload/suites/0"), std::string::npos);
  EXPECT_THROW(load_json(kScenarios + "/missing.json"), SchemaError);
}

TEST(Cli, ParamsOverride) {
  RunFlags flags;
  flags.params = json{{"schema", kParamsSchema}, {"p", 5}, {"f", 1}, {"m", 1}, {"N", 6}};
  auto s = scenario("models_trivial.json");
  const auto out = run_scenario(s, flags);
  EXPECT_EQ(out.report["params"]["p"], 5);
  flags.params = json{{"p", 5}, {"f", 1}, {"m", 1}, {"N", 6}};
  EXPECT_NE(schema_message(s, flags).find("--params/schema"), std::string::npos);
}
