#include "kisin/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <vector>

#include "kisin/errors.hpp"
#include "kisin/ext.hpp"
#include "kisin/models.hpp"
#include "kisin/serre.hpp"
#include "kisin/shape.hpp"
#include "kisin/suites.hpp"

namespace kisin {

namespace {

using nlohmann::json;

std::size_t sz(int x) { return static_cast<std::size_t>(x); }

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t k) { return path + "/" + std::to_string(k); }

// Rejects keys outside required + optional and missing required keys.
void check_keys(const json& j, const std::string& path, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) schema_fail(path, "expected an object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    allowed.insert(k);
    if (!j.contains(k)) schema_fail(child(path, k), "missing required field");
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) schema_fail(child(path, k), "unknown field");
}

int get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_fail(path, "expected an integer");
  return j.get<int>();
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema_fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<int> get_ints(const json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected an array");
  std::vector<int> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(get_int(j[k], child(path, k)));
  return out;
}

std::vector<std::vector<int>> get_int_rows(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) schema_fail(path, "expected a nonempty array of arrays");
  std::vector<std::vector<int>> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(get_ints(j[k], child(path, k)));
    if (out.back().size() != out.front().size()) schema_fail(child(path, k), "rows must have equal length");
  }
  return out;
}

// An integer is read modulo p; an array as coordinates, constant term first.
Fq get_fq(const GaloisField& F, const json& j, const std::string& path) {
  if (j.is_number_integer()) return F.from_int(j.get<long long>());
  const auto c = get_ints(j, path);
  if (c.size() > sz(F.degree())) schema_fail(path, "more coordinates than the field degree");
  return F.from_coeffs(c);
}

std::vector<Fq> get_fqs(const GaloisField& F, const json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected an array");
  std::vector<Fq> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(get_fq(F, j[k], child(path, k)));
  return out;
}

json fq_json(const GaloisField& F, Fq x) { return F.coeffs(x); }

json series_json(const GaloisField& F, const TruncSeries& s) {
  json out = json::array();
  for (int e = 0; e <= s.degree(); ++e) out.push_back(fq_json(F, s[e]));
  return out;
}

json series_matrix_json(const GaloisField& F, const SeriesMatrix& X) {
  json out = json::array();
  for (int i = 0; i < X.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < X.cols(); ++j) row.push_back(series_json(F, X(i, j)));
    out.push_back(row);
  }
  return out;
}

json fq_matrix_json(const GaloisField& F, const FqMatrix& A) {
  json out = json::array();
  for (int i = 0; i < A.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < A.cols(); ++j) row.push_back(fq_json(F, A(i, j)));
    out.push_back(row);
  }
  return out;
}

json model_json(const Model& m) { return m.rows(); }

GlobalParams parse_params(const json& j, const std::string& path) {
  check_keys(j, path, {"p", "f", "m", "N"}, {"field_poly", "schema"});
  GlobalParams gp;
  gp.p = get_int(j["p"], child(path, "p"));
  gp.f = get_int(j["f"], child(path, "f"));
  gp.m = get_int(j["m"], child(path, "m"));
  gp.N = get_int(j["N"], child(path, "N"));
  if (j.contains("field_poly")) gp.field_poly = get_ints(j["field_poly"], child(path, "field_poly"));
  try {
    gp.validate();
  } catch (const InvalidInput& e) {
    schema_fail(path, e.what());
  }
  return gp;
}

json params_json(const GlobalParams& gp, const GaloisField& F) {
  return {{"p", gp.p}, {"f", gp.f}, {"m", gp.m}, {"N", gp.N}, {"field_poly", F.modulus()}};
}

struct Context {
  GlobalParams params;
  GaloisField F;
  const RunFlags& flags;
  json certificates = json::object();
};

WeightTemplate parse_template(const Context& ctx, const json& j, const std::string& path) {
  WeightTemplate w{get_int_rows(j, path)};
  if (w.f() != ctx.params.f) schema_fail(path, "expected f = " + std::to_string(ctx.params.f) + " columns");
  try {
    w.validate(ctx.params.p);
  } catch (const InvalidInput& e) {
    schema_fail(path, e.what());
  }
  return w;
}

Model parse_model(const Context& ctx, const json& j, const std::string& path) {
  const auto rows = get_int_rows(j, path);
  if (static_cast<int>(rows.front().size()) != ctx.params.f)
    schema_fail(path, "expected f = " + std::to_string(ctx.params.f) + " entries per row");
  return Model::from_rows(rows);
}

// Characters from "chars" directly or from the rows of a matrix and units.
std::optional<std::vector<CharClass>> parse_chars(const Context& ctx, const json& payload, const std::string& path) {
  const int p = ctx.params.p;
  if (payload.contains("chars") && payload.contains("rows")) schema_fail(path, "give either chars or rows, not both");
  if (payload.contains("chars")) {
    const auto& arr = payload["chars"];
    const std::string cp = child(path, "chars");
    if (!arr.is_array()) schema_fail(cp, "expected an array");
    const std::int64_t M = residue_modulus(p, ctx.params.f);
    std::vector<CharClass> out;
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string ep = child(cp, k);
      check_keys(arr[k], ep, {"e", "a"});
      if (!arr[k]["e"].is_number_integer()) schema_fail(child(ep, "e"), "expected an integer");
      const std::int64_t e = arr[k]["e"].get<std::int64_t>();
      const Fq a = get_fq(ctx.F, arr[k]["a"], child(ep, "a"));
      if (a == ctx.F.zero()) schema_fail(child(ep, "a"), "unit must be nonzero");
      out.push_back({((e % M) + M) % M, a});
    }
    return out;
  }
  if (payload.contains("rows")) {
    const Model m = parse_model(ctx, payload["rows"], child(path, "rows"));
    std::vector<Fq> units(sz(m.d), ctx.F.one());
    if (payload.contains("units")) {
      units = get_fqs(ctx.F, payload["units"], child(path, "units"));
      if (units.size() != sz(m.d)) schema_fail(child(path, "units"), "expected one unit per row");
      for (Fq u : units)
        if (u == ctx.F.zero()) schema_fail(child(path, "units"), "units must be nonzero");
    }
    std::vector<CharClass> out;
    for (int i = 0; i < m.d; ++i) out.push_back(char_of_row(m, i, units[sz(i)], p));
    return out;
  } else if (payload.contains("units")) {
    schema_fail(child(path, "units"), "units need rows");
  }
  return std::nullopt;
}

WeightTemplate template_of(const Model& m) {
  WeightTemplate w;
  for (int s = 0; s < m.f; ++s) {
    std::vector<int> h;
    for (int i = 0; i < m.d; ++i) h.push_back(m.at(i, s));
    std::sort(h.begin(), h.end());
    w.h.push_back(std::move(h));
  }
  return w;
}

// The template, or the columns of "rows" when the template is omitted.
WeightTemplate template_or_rows(const Context& ctx, const json& payload, const std::string& path) {
  if (payload.contains("template")) return parse_template(ctx, payload["template"], child(path, "template"));
  if (!payload.contains("rows")) schema_fail(child(path, "template"), "missing required field");
  const auto w = template_of(parse_model(ctx, payload["rows"], child(path, "rows")));
  try {
    w.validate(ctx.params.p);
  } catch (const InvalidInput& e) {
    schema_fail(child(path, "rows"), e.what());
  }
  return w;
}

void check_char_count(const std::vector<CharClass>& chars, const WeightTemplate& w, const std::string& path) {
  if (static_cast<int>(chars.size()) != w.d())
    schema_fail(path, "expected " + std::to_string(w.d()) + " characters, one per template row");
}

RunOutcome run_models(Context& ctx, const json& payload, const std::string& path) {
  check_keys(payload, path, {"template"}, {"chars", "rows", "units"});
  const auto w = parse_template(ctx, payload["template"], child(path, "template"));
  const auto chars = parse_chars(ctx, payload, path);
  if (!chars) schema_fail(path, "give chars or rows");
  check_char_count(*chars, w, path);
  const int p = ctx.params.p;
  const auto c1 = check_c1(*chars, w, p);
  const auto c3 = check_c3(w, p);
  json models = json::array();
  for (const auto& m : c1.models) models.push_back(model_json(m));
  json results = {{"models", models},
                  {"model_count", c1.models.size()},
                  {"c1", c1.unique},
                  {"c1_sufficient", c1_sufficient(w, p)},
                  {"c3", c3.holds},
                  {"c3_witness", c3.witness ? json(*c3.witness) : json(nullptr)}};
  json anchors = {{"c1", "exactly one model realizes the characters"},
                  {"c1_sufficient", "template-only cases forcing a unique model"},
                  {"c3", "some column has no two weights differing by p - 1"}};
  return {{{"results", results}, {"anchors", anchors}}, kExitOk};
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json case_json(const CaseSet& cs) {
  json out = json::array();
  for (const auto& c : cs.cases)
    out.push_back({{"id", c.id},
                   {"holds", c.holds},
                   {"s0", c.s0 ? json(*c.s0) : json(nullptr)},
                   {"s0_prime", c.s0_prime ? json(*c.s0_prime) : json(nullptr)}});
  return out;
}

RunOutcome run_conditions(Context& ctx, const json& payload, const std::string& path) {
  check_keys(payload, path, {}, {"template", "chars", "rows", "units", "serre_weight", "a_cyc"});
  const int p = ctx.params.p;
  std::optional<SerreWeight> serre;
  if (payload.contains("serre_weight")) {
    serre = SerreWeight{get_int_rows(payload["serre_weight"], child(path, "serre_weight"))};
    try {
      serre->validate();
    } catch (const InvalidInput& e) {
      schema_fail(child(path, "serre_weight"), e.what());
    }
    if (serre->f() != ctx.params.f) schema_fail(child(path, "serre_weight"), "expected f rows");
  }
  WeightTemplate w;
  if (payload.contains("template") || payload.contains("rows"))
    w = template_or_rows(ctx, payload, path);
  else if (serre)
    w = serre_to_hodge(*serre);
  else
    schema_fail(child(path, "template"), "give a template, rows or a Serre weight");
  const auto chars = parse_chars(ctx, payload, path);
  if (chars) check_char_count(*chars, w, path);
  Fq a_cyc = ctx.F.one();
  if (payload.contains("a_cyc")) a_cyc = get_fq(ctx.F, payload["a_cyc"], child(path, "a_cyc"));
  const auto cyc = make_cyclo(p, ctx.params.f, a_cyc);
  const auto g = evaluate_gate(ctx.F, w, chars, cyc, p, serre);
  json results = {{"c1", g.c1},
                  {"c2a", optional_bool(g.c2a)},
                  {"c2b", optional_bool(g.c2b)},
                  {"corollary_cases", g.corollary_cases},
                  {"corollary_detail", case_json(corollary_cases(ctx.F, w, chars, cyc, p))},
                  {"application_cases", g.application_cases},
                  {"serre_bound_ok", optional_bool(g.serre_bound_ok)},
                  {"standing_bound_ok", optional_bool(g.standing_bound_ok)},
                  {"theorem_main_gate", g.theorem_main_gate},
                  {"template", w.h},
                  {"a_cyc", fq_json(ctx.F, a_cyc)}};
  if (serre) results["application_detail"] = case_json(application_conditions(ctx.F, *serre, chars, cyc, p));
  json anchors = {{"c1", "exactly one model realizes the characters"},
                  {"c2a", "character ratios avoid the trivial and cyclotomic classes"},
                  {"c2b", "no all-0 weight string precedes an all-p weight string"},
                  {"corollary_cases", "template conditions 1 to 4"},
                  {"application_cases", "Serre weight conditions 1 to 4"},
                  {"serre_bound_ok", "a_1 - a_d <= p - 1 in every row"},
                  {"standing_bound_ok", "a_1 - a_d <= p - d + 1 in every row"},
                  {"theorem_main_gate", "c1 and (c2a or c2b)"}};
  return {{{"results", results}, {"anchors", anchors}}, kExitOk};
}

TriangularKisin parse_module(const Context& ctx, const SeriesRing& R, const json& j, const std::string& path) {
  check_keys(j, path, {"t", "a"}, {"entries"});
  const auto t = get_int_rows(j["t"], child(path, "t"));
  if (static_cast<int>(t.front().size()) != ctx.params.f) schema_fail(child(path, "t"), "expected f weights per row");
  const auto a = get_fqs(ctx.F, j["a"], child(path, "a"));
  if (a.size() != t.size()) schema_fail(child(path, "a"), "expected one unit per row");
  for (Fq x : a)
    if (x == ctx.F.zero()) schema_fail(child(path, "a"), "units must be nonzero");
  auto M = TriangularKisin::diagonal(R, t, a);
  if (j.contains("entries")) {
    const auto& es = j["entries"];
    const std::string ep = child(path, "entries");
    if (!es.is_array()) schema_fail(ep, "expected an array");
    for (std::size_t k = 0; k < es.size(); ++k) {
      const std::string p = child(ep, k);
      check_keys(es[k], p, {"s", "i", "j", "coeffs"});
      const int s = get_int(es[k]["s"], child(p, "s")), i = get_int(es[k]["i"], child(p, "i")),
                jj = get_int(es[k]["j"], child(p, "j"));
      if (s < 0 || s >= M.f || i < 0 || jj <= i || jj >= M.d) schema_fail(p, "entry outside the strict upper triangle");
      const auto c = get_fqs(ctx.F, es[k]["coeffs"], child(p, "coeffs"));
      if (static_cast<int>(c.size()) > R.precision()) schema_fail(child(p, "coeffs"), "more coefficients than N");
      M.x(s, i, jj) = R.from_coeffs(c);
    }
  }
  return M;
}

RunOutcome run_ext(Context& ctx, const json& payload, const std::string& path) {
  check_keys(payload, path, {"sub", "quot"}, {"r", "tag", "N"});
  SeriesRing R(ctx.F, ctx.params.N);
  const auto sub = parse_module(ctx, R, payload["sub"], child(path, "sub"));
  const auto quot = parse_module(ctx, R, payload["quot"], child(path, "quot"));
  std::optional<int> r;
  if (payload.contains("r")) r = get_int(payload["r"], child(path, "r"));
  ShapeTag tag = ShapeTag::PhiShape;
  if (payload.contains("tag")) {
    try {
      tag = parse_shape_tag(get_string(payload["tag"], child(path, "tag")));
    } catch (const InvalidInput& e) {
      schema_fail(child(path, "tag"), e.what());
    }
  }
  int N = 0;
  if (payload.contains("N")) N = get_int(payload["N"], child(path, "N"));
  const int p = ctx.params.p;
  ExtProblem P;
  try {
    P = make_problem(sub, quot, p, r);
  } catch (const InvalidInput& e) {
    schema_fail(path, e.what());
  }
  const auto dim = ext_dim(ctx.F, P, tag, N, ctx.flags.precision_step);
  json basis = json::array();
  for (const auto& c : dim.basis) {
    json comps = json::array();
    for (const auto& X : c.C) comps.push_back(series_matrix_json(ctx.F, X));
    basis.push_back(comps);
  }
  json results = {{"tag", to_string(tag)},
                  {"height", P.r},
                  {"dimension", dim.dimension},
                  {"slots", dim.slots},
                  {"admissible", dim.admissible},
                  {"basis", basis}};
  ctx.certificates["ext_precision"] = dim.precision;
  ctx.certificates["ext_check_precision"] = dim.check_precision;
  ctx.certificates["ext_check_dimension"] = dim.check_dimension;
  int exit_code = kExitOk;
  if (P.k() == 1) {
    try {
      const auto ub = check_upper_bound(ctx.F, P, N, ctx.flags.precision_step);
      results["upper_bound"] = {{"hypothesis", true}, {"ext_dim", ub.ext_dim}, {"d_nek", ub.d_nek}, {"holds", ub.holds}};
      if (!ub.holds) exit_code = kExitViolation;
    } catch (const HypothesisError& e) {
      results["upper_bound"] = {{"hypothesis", false}, {"reason", e.what()}};
    }
  }
  json anchors = {{"dimension", "tagged height-admissible classes modulo coboundaries"},
                  {"d_nek", "(row, embedding) pairs whose quotient weight exceeds the sub weight"},
                  {"admissible", "slot space dimension after the height filter"}};
  return {{{"results", results}, {"anchors", anchors}}, exit_code};
}

RunOutcome run_shape_verify(Context& ctx, const json& payload, const std::string& path) {
  check_keys(payload, path, {"d", "t"}, {"mode", "trials", "budget"});
  ShapeVerifyConfig c;
  c.d = get_int(payload["d"], child(path, "d"));
  c.t = get_ints(payload["t"], child(path, "t"));
  c.seed = ctx.flags.seed;
  if (payload.contains("mode")) {
    const auto mode = get_string(payload["mode"], child(path, "mode"));
    if (mode != "exhaustive" && mode != "random") schema_fail(child(path, "mode"), "expected exhaustive or random");
    c.exhaustive = mode == "exhaustive";
  }
  if (payload.contains("trials")) c.trials = static_cast<std::uint64_t>(get_int(payload["trials"], child(path, "trials")));
  if (payload.contains("budget")) c.budget = static_cast<std::uint64_t>(get_int(payload["budget"], child(path, "budget")));
  if (ctx.flags.budget != 0) c.budget = std::min(c.budget, ctx.flags.budget);
  ShapeVerifyReport r;
  try {
    r = shapelemma_verify(ctx.F, c);
  } catch (const InvalidInput& e) {
    schema_fail(path, e.what());
  }
  json ce = json::array();
  for (std::size_t k = 0; k < r.counterexamples.size() && k < 5; ++k)
    ce.push_back({{"X", series_matrix_json(ctx.F, r.counterexamples[k].X)},
                  {"A", fq_matrix_json(ctx.F, r.counterexamples[k].A)}});
  json results = {{"mode", c.exhaustive ? "exhaustive" : "random"},
                  {"x_checked", r.x_checked},
                  {"x_without_shape", r.x_without_p},
                  {"gl_order", r.gl_order},
                  {"pairs_checked", r.pairs_checked},
                  {"hypothesis_pairs", r.hypothesis_pairs},
                  {"counterexample_count", r.counterexamples.size()},
                  {"counterexamples", ce}};
  json anchors = {{"counterexample_count",
                   "X meeting the column divisibility hypothesis for some A without having the shape"}};
  return {{{"results", results}, {"anchors", anchors}}, r.counterexamples.empty() ? kExitOk : kExitViolation};
}

RunOutcome run_pls(Context& ctx, const json& payload, const std::string& path) {
  check_keys(payload, path, {}, {"template", "chars", "rows", "units", "mode", "pair"});
  const auto w = template_or_rows(ctx, payload, path);
  const auto chars = parse_chars(ctx, payload, path);
  if (!chars) schema_fail(path, "give chars or rows");
  check_char_count(*chars, w, path);
  PlsMode mode = PlsMode::Cyclic;
  if (payload.contains("mode")) {
    const auto m = get_string(payload["mode"], child(path, "mode"));
    if (m != "cyclic" && m != "prefix") schema_fail(child(path, "mode"), "expected cyclic or prefix");
    mode = m == "prefix" ? PlsMode::Prefix : PlsMode::Cyclic;
  }
  const auto comps = pls_reachability(*chars, w, ctx.params.p, mode);
  json cj = json::array();
  std::size_t total = 0;
  for (const auto& c : comps) {
    json models = json::array();
    for (const auto& m : c) models.push_back(model_json(m));
    cj.push_back(models);
    total += c.size();
  }
  json results = {{"mode", mode == PlsMode::Prefix ? "prefix" : "cyclic"},
                  {"components", cj},
                  {"component_count", comps.size()},
                  {"model_count", total},
                  {"c3", check_c3(w, ctx.params.p).holds}};
  if (payload.contains("pair")) {
    const auto& pr = payload["pair"];
    const std::string pp = child(path, "pair");
    if (!pr.is_array() || pr.size() != 2) schema_fail(pp, "expected two matrices");
    const Model a = parse_model(ctx, pr[0], child(pp, 0)), b = parse_model(ctx, pr[1], child(pp, 1));
    auto where = [&](const Model& m) -> json {
      for (std::size_t k = 0; k < comps.size(); ++k)
        if (std::find(comps[k].begin(), comps[k].end(), m) != comps[k].end()) return k;
      return nullptr;
    };
    const json ca = where(a), cb = where(b);
    results["pair"] = {{"component_first", ca},
                       {"component_second", cb},
                       {"linked", !ca.is_null() && ca == cb}};
  }
  json anchors = {{"components", "models joined by residue-preserving partial line swaps"},
                  {"c3", "some column has no two weights differing by p - 1"}};
  return {{{"results", results}, {"anchors", anchors}}, kExitOk};
}

RunOutcome sweep(const std::vector<std::string>& ids, const RunFlags& flags) {
  SuiteConfig config;
  config.seed = flags.seed;
  config.budget = flags.budget;
  config.precision_step = flags.precision_step;
  json suites = json::array();
  int passed = 0, failed = 0, inconclusive = 0;
  for (const auto& id : ids) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = run_suite(id, config);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "suite " << id << ": " << to_string(r.status) << " in " << secs << " s\n";
    suites.push_back({{"id", r.id},
                      {"status", to_string(r.status)},
                      {"checked", r.checked},
                      {"failures", r.failures},
                      {"details", r.details}});
    if (r.status == SuiteStatus::Pass) ++passed;
    if (r.status == SuiteStatus::Fail) ++failed;
    if (r.status == SuiteStatus::Inconclusive) ++inconclusive;
  }
  json results = {{"suites", suites},
                  {"passed", passed},
                  {"failed", failed},
                  {"inconclusive", inconclusive},
                  {"all_passed", failed == 0 && inconclusive == 0}};
  json anchors = {{"suites", "registered property suites run with the seed and budget in provenance"}};
  return {{{"results", results}, {"anchors", anchors}}, failed > 0 ? kExitViolation : kExitOk};
}

std::vector<std::string> sweep_ids(const json& payload, const std::string& path, const RunFlags& flags) {
  check_keys(payload, path, {}, {"profile", "suites"});
  if (flags.profile) return profile_suites(*flags.profile);
  if (payload.contains("suites")) {
    const auto& arr = payload["suites"];
    if (!arr.is_array()) schema_fail(child(path, "suites"), "expected an array");
    std::vector<std::string> ids;
    for (std::size_t k = 0; k < arr.size(); ++k) {
      ids.push_back(get_string(arr[k], child(child(path, "suites"), k)));
      const auto& reg = suite_registry();
      if (std::none_of(reg.begin(), reg.end(), [&](const SuiteInfo& s) { return s.id == ids.back(); }))
        schema_fail(child(child(path, "suites"), k), "unknown suite '" + ids.back() + "'");
    }
    return ids;
  }
  const std::string profile = payload.contains("profile") ? get_string(payload["profile"], child(path, "profile")) : "desk";
  try {
    return profile_suites(profile);
  } catch (const InvalidInput& e) {
    schema_fail(child(path, "profile"), e.what());
  }
}

json assemble(const std::string& task, const json& params, RunOutcome& out, const RunFlags& flags,
              const json& certificates) {
  json report = {{"schema", kReportSchema},
                 {"task", task},
                 {"params", params},
                 {"results", out.report["results"]},
                 {"anchors", out.report["anchors"]},
                 {"provenance",
                  {{"tool_version", kToolVersion},
                   {"seed", flags.seed},
                   {"precision_step", flags.precision_step},
                   {"budget", flags.budget},
                   {"certificates", certificates}}}};
  return report;
}

}  // namespace

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

RunOutcome run_scenario(const json& scenario, const RunFlags& flags) {
  check_keys(scenario, "", {"schema", "params", "task", "payload"});
  if (get_string(scenario["schema"], "/schema") != kScenarioSchema)
    schema_fail("/schema", std::string("expected ") + kScenarioSchema);
  json params_src = scenario["params"];
  std::string params_path = "/params";
  if (flags.params) {
    params_src = *flags.params;
    params_path = "--params";
    if (!params_src.is_object() || !params_src.contains("schema") || params_src["schema"] != kParamsSchema)
      schema_fail(params_path + "/schema", std::string("expected ") + kParamsSchema);
  } else if (params_src.is_object() && params_src.contains("schema")) {
    schema_fail("/params/schema", "unknown field");
  }
  const GlobalParams gp = parse_params(params_src, params_path);
  Context ctx{gp, gp.make_field(), flags};
  const std::string task = get_string(scenario["task"], "/task");
  const json& payload = scenario["payload"];
  if (!payload.is_object()) schema_fail("/payload", "expected an object");
  RunOutcome out;
  if (task == "models")
    out = run_models(ctx, payload, "/payload");
  else if (task == "conditions")
    out = run_conditions(ctx, payload, "/payload");
  else if (task == "ext")
    out = run_ext(ctx, payload, "/payload");
  else if (task == "shape-verify")
    out = run_shape_verify(ctx, payload, "/payload");
  else if (task == "pls")
    out = run_pls(ctx, payload, "/payload");
  else if (task == "sweep")
    out = sweep(sweep_ids(payload, "/payload", flags), flags);
  else
    schema_fail("/task", "unknown task '" + task + "'");
  out.report = assemble(task, params_json(gp, ctx.F), out, flags, ctx.certificates);
  return out;
}

RunOutcome run_profile(const std::string& profile, const RunFlags& flags) {
  RunOutcome out = sweep(profile_suites(profile), flags);
  out.report = assemble("sweep", nullptr, out, flags, json::object());
  return out;
}

std::string render_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace kisin
