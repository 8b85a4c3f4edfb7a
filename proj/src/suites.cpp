#include "kisin/suites.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <tuple>

#include "kisin/errors.hpp"
#include "kisin/ext.hpp"
#include "kisin/models.hpp"
#include "kisin/rank1.hpp"
#include "kisin/serre.hpp"
#include "kisin/shape.hpp"

namespace kisin {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxSamples = 5;

std::size_t sz(int x) { return static_cast<std::size_t>(x); }

// Counts instances against the budget and keeps a few failing samples.
class Tally {
 public:
  Tally(std::string id, const SuiteConfig& config) : config_(config) { result_.id = std::move(id); }

  // False once the budget is spent; the suite should stop.
  bool next() {
    if (config_.budget != 0 && result_.checked >= config_.budget) {
      exhausted_ = true;
      return false;
    }
    ++result_.checked;
    return true;
  }

  void fail(json sample) {
    ++result_.failures;
    if (samples_.size() < kMaxSamples) samples_.push_back(std::move(sample));
  }

  json& details() { return result_.details; }

  SuiteResult finish() {
    if (!samples_.empty()) result_.details["failing_samples"] = samples_;
    if (result_.failures > 0)
      result_.status = SuiteStatus::Fail;
    else if (exhausted_)
      result_.status = SuiteStatus::Inconclusive;
    if (exhausted_) result_.details["budget_exhausted"] = true;
    return std::move(result_);
  }

 private:
  const SuiteConfig& config_;
  SuiteResult result_;
  json samples_ = json::array();
  bool exhausted_ = false;
};

// Every vector in [lo, hi]^n in lexicographic order.
std::vector<std::vector<int>> all_vectors(int n, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(sz(n), lo);
  while (true) {
    out.push_back(v);
    int k = n - 1;
    while (k >= 0 && v[sz(k)] == hi) v[sz(k--)] = lo;
    if (k < 0) return out;
    ++v[sz(k)];
  }
}

// d-element subsets of [0, hi], ascending.
std::vector<std::vector<int>> subsets(int d, int hi) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << (hi + 1)); ++mask) {
    if (std::popcount(mask) != d) continue;
    std::vector<int> c;
    for (int x = 0; x <= hi; ++x)
      if (mask >> x & 1u) c.push_back(x);
    out.push_back(std::move(c));
  }
  return out;
}

// Every template with f columns drawn from `cols`.
template <class Fn>
void for_each_template(const std::vector<std::vector<int>>& cols, int f, Fn fn) {
  std::vector<std::size_t> idx(sz(f), 0);
  while (true) {
    WeightTemplate w;
    for (auto k : idx) w.h.push_back(cols[k]);
    if (!fn(w)) return;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == cols.size()) idx[k++] = 0;
    if (k == idx.size()) return;
  }
}

// Character lists of every matrix whose columns are orderings of the
// template columns, deduplicated, with unit 1.
std::vector<std::vector<CharClass>> realizable_chars(const WeightTemplate& w, int p) {
  const int d = w.d(), f = w.f();
  std::vector<std::vector<int>> cols = w.h;
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<CharClass>> out;
  std::function<void(int)> rec = [&](int s) {
    if (s == f) {
      Model m(d, f);
      for (int i = 0; i < d; ++i)
        for (int c = 0; c < f; ++c) m.at(i, c) = cols[sz(c)][sz(i)];
      std::vector<CharClass> chars;
      std::vector<std::int64_t> key;
      for (int i = 0; i < d; ++i) {
        chars.push_back(char_of_row(m, i, Fq{1}, p));
        key.push_back(chars.back().e);
      }
      if (seen.insert(key).second) out.push_back(std::move(chars));
      return;
    }
    std::sort(cols[sz(s)].begin(), cols[sz(s)].end());
    do rec(s + 1);
    while (std::next_permutation(cols[sz(s)].begin(), cols[sz(s)].end()));
  };
  rec(0);
  return out;
}

json model_json(const Model& m) { return m.rows(); }

json chars_json(const std::vector<CharClass>& chars) {
  json out = json::array();
  for (const auto& c : chars) out.push_back({{"e", c.e}, {"a", c.a.code}});
  return out;
}

SuiteResult alpha_recurrence(const SuiteConfig& config) {
  Tally tally("alpha-recurrence", config);
  for (int p : {3, 5})
    for (int f = 1; f <= 3; ++f)
      for (const auto& t : all_vectors(f, 0, p)) {
        if (!tally.next()) return tally.finish();
        const auto a = alpha_invariant({t, Fq{1}}, p);
        for (int s = 0; s < f; ++s)
          if (Rational(p) * a[sz((s + f - 1) % f)] - a[sz(s)] != Rational(t[sz(s)])) {
            tally.fail({{"p", p}, {"t", t}, {"s", s}});
            break;
          }
      }
  return tally.finish();
}

SuiteResult gls_classifier(const SuiteConfig& config) {
  Tally tally("gls-classifier", config);
  std::uint64_t string_lists = 0;
  for (int p : {3, 5})
    for (int f = 1; f <= 4; ++f) {
      const std::int64_t M = residue_modulus(p, f);
      for (const auto& diff : all_vectors(f, -p, p)) {
        if (weighted_sum(diff, p) % M != 0) continue;
        if (!tally.next()) return tally.finish();
        try {
          const auto dec = classify_gls(diff, p);
          if (dec.kind == GlsKind::StringList) ++string_lists;
          if (dec.reassemble(f, p) != diff) tally.fail({{"p", p}, {"diff", diff}, {"reason", "reassembly differs"}});
        } catch (const ClassificationError& e) {
          tally.fail({{"p", p}, {"diff", diff}, {"reason", e.what()}});
        }
      }
    }
  tally.details()["string_lists"] = string_lists;
  return tally.finish();
}

SuiteResult criterion_equivalence(const SuiteConfig& config) {
  Tally tally("criterion-equivalence", config);
  GaloisField F(3, 1);
  const int p = 3;
  std::uint64_t isomorphic = 0;
  for (int f = 1; f <= 3; ++f) {
    const auto ts = all_vectors(f, 0, p);
    for (const auto& t : ts)
      for (const auto& u : ts)
        for (Fq a : F.units())
          for (Fq b : F.units()) {
            if (!tally.next()) return tally.finish();
            const Rank1Kisin n{t, a}, m{u, b};
            const bool by_residue = iso_as_ginf(n, m, p);
            if (by_residue) ++isomorphic;
            if (by_residue != iso_by_alpha(n, m, p))
              tally.fail({{"t", t}, {"t_prime", u}, {"a", a.code}, {"a_prime", b.code}});
          }
  }
  tally.details()["isomorphic_pairs"] = isomorphic;
  return tally.finish();
}

SuiteResult c1_sufficiency(const SuiteConfig& config) {
  Tally tally("c1-sufficiency", config);
  const int p = 3;
  json per_case = json::object();
  std::map<int, std::pair<std::uint64_t, std::uint64_t>> stats;
  bool stopped = false;
  for (int f = 1; f <= 2 && !stopped; ++f)
    for (int d = 1; d <= 3 && !stopped; ++d)
      for_each_template(subsets(d, p), f, [&](const WeightTemplate& w) {
        const auto cases = c1_sufficient(w, p);
        if (cases.empty()) return true;
        for (const auto& chars : realizable_chars(w, p)) {
          if (!tally.next()) {
            stopped = true;
            return false;
          }
          const auto models = enumerate_models(chars, w, p);
          for (int c : cases) {
            ++stats[c].first;
            if (models.size() != 1) ++stats[c].second;
          }
          if (models.size() != 1) {
            json ms = json::array();
            for (const auto& m : models) ms.push_back(model_json(m));
            tally.fail({{"template", w.h}, {"cases", cases}, {"chars", chars_json(chars)}, {"models", ms}});
          }
        }
        return true;
      });
  for (const auto& [c, s] : stats) per_case[std::to_string(c)] = {{"checked", s.first}, {"failures", s.second}};
  tally.details()["per_case"] = per_case;
  return tally.finish();
}

SuiteResult shape_divisibility(const SuiteConfig& config) {
  Tally tally("shape-divisibility", config);
  std::uint64_t pairs = 0, hypothesis = 0, x_total = 0;
  auto record = [&](const ShapeVerifyReport& r) {
    pairs += r.pairs_checked;
    hypothesis += r.hypothesis_pairs;
    x_total += r.x_checked;
    if (!r.counterexamples.empty())
      tally.fail({{"d", r.config.d}, {"t", r.config.t}, {"counterexamples", r.counterexamples.size()}});
  };
  for (int p : {3, 5}) {
    GaloisField F(p, 1);
    for (int t0 = 0; t0 <= p; ++t0)
      for (int t1 = 0; t1 <= p; ++t1) {
        if (t0 == t1) continue;
        if (!tally.next()) return tally.finish();
        ShapeVerifyConfig c;
        c.d = 2;
        c.t = {t0, t1};
        record(shapelemma_verify(F, c));
      }
  }
  GaloisField F3(3, 1);
  std::vector<std::vector<int>> triples;
  for (const auto& t : all_vectors(3, 0, 3))
    if (t[0] != t[1] && t[0] != t[2] && t[1] != t[2]) triples.push_back(t);
  const std::uint64_t total_trials = 10000;
  const std::uint64_t per = (total_trials + triples.size() - 1) / triples.size();
  for (std::size_t k = 0; k < triples.size(); ++k) {
    if (!tally.next()) return tally.finish();
    ShapeVerifyConfig c;
    c.d = 3;
    c.t = triples[k];
    c.exhaustive = false;
    c.trials = per;
    c.seed = config.seed + k;
    record(shapelemma_verify(F3, c));
  }
  tally.details()["x_checked"] = x_total;
  tally.details()["pairs_checked"] = pairs;
  tally.details()["hypothesis_pairs"] = hypothesis;
  tally.details()["random_trials_d3"] = per * triples.size();
  return tally.finish();
}

TriangularKisin random_p_shape(const SeriesRing& R, int d, int f, std::mt19937_64& rng) {
  const GaloisField& F = R.field();
  const int p = R.p();
  std::uniform_int_distribution<std::uint32_t> pick(0, F.order() - 1), unit(1, F.order() - 1);
  std::vector<std::vector<int>> t(sz(d), std::vector<int>(sz(f)));
  for (int s = 0; s < f; ++s) {
    std::vector<int> w(sz(p) + 1);
    for (int k = 0; k <= p; ++k) w[sz(k)] = k;
    std::shuffle(w.begin(), w.end(), rng);
    for (int i = 0; i < d; ++i) t[sz(i)][sz(s)] = w[sz(i)];
  }
  std::vector<Fq> a;
  for (int i = 0; i < d; ++i) a.push_back(Fq{unit(rng)});
  TriangularKisin M = TriangularKisin::diagonal(R, t, a);
  for (int s = 0; s < f; ++s)
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (t[sz(j)][sz(s)] > t[sz(i)][sz(s)]) M.x(s, i, j) = R.monomial(Fq{pick(rng)}, t[sz(i)][sz(s)]);
  return M;
}

SuiteResult allowable_roundtrip(const SuiteConfig& config) {
  Tally tally("allowable-roundtrip", config);
  GaloisField F(3, 1);
  SeriesRing R(F, 13);
  std::mt19937_64 rng(config.seed);
  std::uint64_t moves = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    if (!tally.next()) return tally.finish();
    const int d = 1 + trial % 4, f = 1 + (trial / 4) % 2;
    const auto M = random_p_shape(R, d, f, rng);
    const auto n = normalize_to_diagonal(R, M);
    moves += n.moves.size();
    bool diagonal = true;
    for (int s = 0; s < f; ++s)
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
          if (!n.diagonal.x(s, i, j).is_zero()) diagonal = false;
    if (!diagonal || replay(R, n.diagonal, inverse_moves(F, n.moves)) != M)
      tally.fail({{"trial", trial}, {"d", d}, {"f", f}, {"t", M.t}, {"diagonal", diagonal}});
  }
  tally.details()["moves"] = moves;
  return tally.finish();
}

Cochain random_cochain(const SeriesRing& R, const ExtProblem& P, std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<std::uint32_t> pick(0, R.field().order() - 1);
  Cochain C = zero_cochain(R, P);
  for (auto& X : C)
    for (int i = 0; i < X.rows(); ++i)
      for (int j = 0; j < X.cols(); ++j)
        for (int e = 0; e < deg && e < R.precision(); ++e) X(i, j)[e] = Fq{pick(rng)};
  return C;
}

// Upper-triangular data with weights in [0, p] and shaped off-diagonal entries.
TriangularKisin random_shaped(const SeriesRing& R, int d, int f, std::mt19937_64& rng) {
  const GaloisField& F = R.field();
  std::uniform_int_distribution<int> wt(0, R.p());
  std::uniform_int_distribution<std::uint32_t> pick(0, F.order() - 1), unit(1, F.order() - 1);
  std::vector<std::vector<int>> t(sz(d), std::vector<int>(sz(f)));
  for (auto& row : t)
    for (auto& w : row) w = wt(rng);
  std::vector<Fq> a;
  for (int i = 0; i < d; ++i) a.push_back(Fq{unit(rng)});
  auto M = TriangularKisin::diagonal(R, t, a);
  for (int s = 0; s < f; ++s)
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (t[sz(j)][sz(s)] > t[sz(i)][sz(s)]) M.x(s, i, j) = R.monomial(Fq{pick(rng)}, t[sz(i)][sz(s)]);
  return M;
}

SuiteResult ext_conjugation(const SuiteConfig& config) {
  Tally tally("ext-conjugation", config);
  GaloisField F(3, 1);
  SeriesRing R(F, 14);
  std::mt19937_64 rng(config.seed);
  for (int trial = 0; trial < 1000; ++trial) {
    if (!tally.next()) return tally.finish();
    const int f = 1 + trial % 2, k = 1 + (trial / 2) % 2, kq = 1 + (trial / 4) % 2;
    const auto P = make_problem(random_shaped(R, k, f, rng), random_shaped(R, kq, f, rng), 3);
    const Cochain C = random_cochain(R, P, rng, 6), W = random_cochain(R, P, rng, 6);
    if (block_basis_change(R, P, C, W) != block_conjugate(R, P, C, W))
      tally.fail({{"trial", trial}, {"sub_t", P.sub.t}, {"quot_t", P.quot.t}});
  }
  tally.details()["precision"] = R.precision();
  return tally.finish();
}

// Rank-1 sub over a quotient assembled from the rest of the chain, with
// the quotient's shaped off-diagonal constants taken from every choice in F_3.
SuiteResult dimension_bound(const SuiteConfig& config) {
  Tally tally("dimension-bound", config);
  const int p = 3;
  GaloisField F(p, 1);
  SeriesRing R(F, 8);
  std::uint64_t excluded = 0, equality = 0, certificate_errors = 0;
  int max_dim = 0;
  for (int f = 1; f <= 2; ++f)
    for (int d = 2; d <= 3; ++d)
      for (const auto& flat : all_vectors(d * f, 0, p))
        for (unsigned am = 0; am < (1u << d); ++am) {
          std::vector<Rank1Kisin> chain;
          for (int i = 0; i < d; ++i)
            chain.push_back({std::vector<int>(flat.begin() + i * f, flat.begin() + (i + 1) * f), Fq{(am >> i & 1u) ? 2u : 1u}});
          bool hom = false;
          for (int i = 0; i < d && !hom; ++i)
            for (int j = i + 1; j < d && !hom; ++j) hom = hom_exists(chain[sz(j)], chain[sz(i)], p);
          if (hom) {
            ++excluded;
            continue;
          }
          const auto sub = TriangularKisin::from_chain(R, {chain[0]});
          const auto base = TriangularKisin::from_chain(R, std::vector<Rank1Kisin>(chain.begin() + 1, chain.end()));
          std::vector<std::tuple<int, int, int>> slots;  // (s, i, j) of free quotient entries
          for (int s = 0; s < f; ++s)
            for (int i = 0; i < base.d; ++i)
              for (int j = i + 1; j < base.d; ++j)
                if (base.t[sz(j)][sz(s)] > base.t[sz(i)][sz(s)]) slots.emplace_back(s, i, j);
          for (const auto& ys : all_vectors(static_cast<int>(slots.size()), 0, p - 1)) {
            if (!tally.next()) return tally.finish();
            auto quot = base;
            for (std::size_t k = 0; k < slots.size(); ++k) {
              const auto [s, i, j] = slots[k];
              quot.x(s, i, j) = R.monomial(F.from_int(ys[k]), base.t[sz(i)][sz(s)]);
            }
            json sample = {{"chain_t", flat}, {"f", f}, {"d", d}, {"units_mask", am}, {"quot_constants", ys}};
            try {
              const auto rep = check_upper_bound(F, make_problem(sub, quot, p), 0, config.precision_step);
              max_dim = std::max(max_dim, rep.ext_dim);
              if (rep.ext_dim == rep.d_nek) ++equality;
              if (!rep.holds) {
                sample["ext_dim"] = rep.ext_dim;
                sample["d_nek"] = rep.d_nek;
                tally.fail(sample);
              }
            } catch (const PrecisionError& e) {
              ++certificate_errors;
              sample["reason"] = e.what();
              tally.fail(sample);
            }
          }
        }
  tally.details()["excluded_by_hom"] = excluded;
  tally.details()["attains_bound"] = equality;
  tally.details()["certificate_errors"] = certificate_errors;
  tally.details()["max_ext_dim"] = max_dim;
  tally.details()["precision_step"] = config.precision_step;
  return tally.finish();
}

std::vector<CharClass> chars_of(const Model& m, int p) {
  std::vector<CharClass> out;
  for (int i = 0; i < m.d; ++i) out.push_back(char_of_row(m, i, Fq{1}, p));
  return out;
}

bool linked(const std::vector<std::vector<Model>>& comps, const Model& a, const Model& b) {
  for (const auto& c : comps) {
    const bool has_a = std::find(c.begin(), c.end(), a) != c.end();
    const bool has_b = std::find(c.begin(), c.end(), b) != c.end();
    if (has_a || has_b) return has_a && has_b;
  }
  return false;
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

}  // namespace

std::vector<std::pair<Model, Model>> pls_counterexample_pairs() {
  std::vector<std::pair<Model, Model>> out;
  out.emplace_back(Model::from_rows({{1, 1}, {4, 5}, {0, 0}, {5, 4}}), Model::from_rows({{5, 5}, {0, 1}, {4, 4}, {1, 0}}));
  for (int a : {1, 2, 3, 5})
    for (int b : {0, 2, 3, 4})
      out.emplace_back(Model::from_rows({{0, 0, 5, 1}, {4, 4, 4, 5}, {a, 5, 0, b}}),
                       Model::from_rows({{4, 5, 4, 5}, {0, 0, 0, 1}, {a, 4, 5, b}}));
  return out;
}

namespace {

SuiteResult pls_regression(const SuiteConfig& config) {
  Tally tally("pls-regression", config);
  const int p5 = 5;
  std::uint64_t pair_failures = 0;
  for (const auto& [n, np] : pls_counterexample_pairs()) {
    if (!tally.next()) return tally.finish();
    const auto w = template_of(n);
    const auto comps = pls_reachability(chars_of(n, p5), w, p5);
    if (linked(comps, n, np)) {
      ++pair_failures;
      tally.fail({{"part", "counterexample pair"}, {"n", model_json(n)}, {"n_prime", model_json(np)}});
    }
  }
  std::uint64_t instances = 0, multi = 0, disconnected = 0;
  for (int p : {3, 5})
    for (int f = 1; f <= 2; ++f)
      for (int d = 1; d <= 4; ++d) {
        bool stopped = false;
        for_each_template(subsets(d, p), f, [&](const WeightTemplate& w) {
          if (!check_c3(w, p).holds) return true;
          for (const auto& chars : realizable_chars(w, p)) {
            if (!tally.next()) {
              stopped = true;
              return false;
            }
            ++instances;
            const auto comps = pls_reachability(chars, w, p);
            if (!comps.empty() && comps.front().size() > 1) ++multi;
            if (comps.size() > 1) {
              ++disconnected;
              tally.fail({{"part", "connectivity"}, {"p", p}, {"template", w.h}, {"components", comps.size()}});
            }
          }
          return true;
        });
        if (stopped) return tally.finish();
      }
  tally.details()["pairs"] = pls_counterexample_pairs().size();
  tally.details()["pairs_linked"] = pair_failures;
  tally.details()["c3_instances"] = instances;
  tally.details()["c3_instances_with_several_models"] = multi;
  tally.details()["c3_disconnected"] = disconnected;
  tally.details()["move_mode"] = "cyclic";
  return tally.finish();
}

std::vector<std::vector<int>> decreasing_rows(int d, int hi) {
  std::vector<std::vector<int>> out;
  for (auto& v : all_vectors(d, 0, hi))
    if (std::is_sorted(v.begin(), v.end(), std::greater<>())) out.push_back(v);
  return out;
}

SuiteResult gate_consistency(const SuiteConfig& config) {
  Tally tally("gate-consistency", config);
  const int p = 5;
  GaloisField F(p, 1);
  std::uint64_t outside = 0, outside_mismatch = 0;
  for (int f = 1; f <= 2; ++f)
    for (int d = 1; d <= 3; ++d) {
      const auto cyc = make_cyclo(p, f);
      std::vector<std::optional<std::vector<CharClass>>> modes{std::nullopt};
      std::vector<CharClass> distinct, equal;
      for (int i = 0; i < d; ++i) {
        distinct.push_back({0, F.from_int(i + 1)});
        equal.push_back({0, F.one()});
      }
      modes.emplace_back(distinct);
      modes.emplace_back(equal);
      bool stopped = false;
      const auto rows = decreasing_rows(d, p - 1);
      for_each_template(rows, f, [&](const WeightTemplate& rowset) {
        const SerreWeight w{rowset.h};
        const auto h = serre_to_hodge(w);
        for (const auto& chars : modes) {
          const auto app = application_conditions(F, w, chars, cyc, p).satisfied();
          const auto cor = corollary_cases(F, h, chars, cyc, p).satisfied();
          if (!w.standing_bound(p)) {
            ++outside;
            if (app != cor) ++outside_mismatch;
            continue;
          }
          if (!tally.next()) {
            stopped = true;
            return false;
          }
          if (app != cor) tally.fail({{"a", w.a}, {"application", app}, {"corollary", cor}});
        }
        return true;
      });
      if (stopped) return tally.finish();
    }
  tally.details()["outside_standing_bound"] = outside;
  tally.details()["outside_standing_bound_mismatches"] = outside_mismatch;
  return tally.finish();
}

// The recurrence with the wrong sign; must fail.
SuiteResult selftest_fail(const SuiteConfig& config) {
  Tally tally("selftest-fail", config);
  const int p = 3;
  for (const auto& t : all_vectors(2, 0, p)) {
    if (!tally.next()) return tally.finish();
    const auto a = alpha_invariant({t, Fq{1}}, p);
    if (Rational(p) * a[1] + a[0] != Rational(t[0])) tally.fail({{"t", t}});
  }
  return tally.finish();
}

}  // namespace

std::string to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::Pass:
      return "pass";
    case SuiteStatus::Fail:
      return "fail";
    case SuiteStatus::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> registry{
      {"alpha-recurrence", "p alpha_{s-1} - alpha_s = t_s, p in {3,5}, f <= 3, exhaustive", alpha_recurrence},
      {"gls-classifier", "congruent differences in [-p,p]^f decompose and reassemble, f <= 4", gls_classifier},
      {"criterion-equivalence", "residue and alpha isomorphism tests agree, p = 3, f <= 3", criterion_equivalence},
      {"c1-sufficiency", "sufficient cases give exactly one model, p = 3, f <= 2, d <= 3", c1_sufficiency},
      {"shape-divisibility", "column divisibility forces the shape, d = 2 exhaustive, d = 3 random", shape_divisibility},
      {"allowable-roundtrip", "normalization replays back to the input, 1000 instances", allowable_roundtrip},
      {"ext-conjugation", "basis change equals block conjugation, 1000 instances", ext_conjugation},
      {"dimension-bound", "shaped extension dimension <= d_nek, p = 3, f <= 2, d <= 3", dimension_bound},
      {"pls-regression", "counterexample pairs unreachable, C-3 instances connected", pls_regression},
      {"gate-consistency", "weight conditions match template conditions, p = 5", gate_consistency},
      {"selftest-fail", "falsified recurrence fixture", selftest_fail},
  };
  return registry;
}

std::vector<std::string> profile_suites(const std::string& profile) {
  if (profile == "desk") {
    std::vector<std::string> out;
    for (const auto& s : suite_registry())
      if (s.id != "selftest-fail") out.push_back(s.id);
    return out;
  }
  if (profile == "quick")
    return {"alpha-recurrence", "gls-classifier", "criterion-equivalence", "allowable-roundtrip", "ext-conjugation",
            "gate-consistency"};
  if (profile == "selftest-fail") return {"selftest-fail"};
  throw InvalidInput("unknown profile '" + profile + "'");
}

SuiteResult run_suite(const std::string& id, const SuiteConfig& config) {
  for (const auto& s : suite_registry())
    if (s.id == id) return s.run(config);
  throw InvalidInput("unknown suite '" + id + "'");
}

}  // namespace kisin
