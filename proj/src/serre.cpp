#include "kisin/serre.hpp"

#include <algorithm>

#include "kisin/errors.hpp"

namespace kisin {

namespace {

std::size_t sz(int x) { return static_cast<std::size_t>(x); }

bool has_difference(const std::vector<int>& h, int diff) {
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j)
      if (h[i] - h[j] == diff) return true;
  return false;
}

bool contains(const std::vector<int>& h, int x) { return std::find(h.begin(), h.end(), x) != h.end(); }

std::optional<int> first_column_without(const WeightTemplate& w, int x) {
  for (int s = 0; s < w.f(); ++s)
    if (!contains(w.h[sz(s)], x)) return s;
  return std::nullopt;
}

bool no_difference_one(const WeightTemplate& w) {
  for (const auto& h : w.h)
    if (has_difference(h, 1)) return false;
  return true;
}

// a_{s,i} + (d - i) - a_{s,j} - (d - j) for 0-based i < j.
int shifted_diff(const SerreWeight& w, int s, int i, int j) {
  return w.a[sz(s)][sz(i)] - w.a[sz(s)][sz(j)] + (j - i);
}

int spread(const SerreWeight& w, int s) { return shifted_diff(w, s, 0, w.d() - 1); }

bool row_avoids(const SerreWeight& w, int s, int value) {
  for (int i = 0; i < w.d(); ++i)
    for (int j = i + 1; j < w.d(); ++j)
      if (shifted_diff(w, s, i, j) == value) return false;
  return true;
}

}  // namespace

CycloClass make_cyclo(int p, int f, Fq a_cyc) {
  const std::int64_t M = residue_modulus(p, f);
  return CycloClass{M, ((M / (p - 1)) % M + M) % M, a_cyc};
}

C2AResult check_c2a(const GaloisField& F, const std::vector<CharClass>& chars, const CycloClass& cyc) {
  C2AResult out;
  const std::int64_t M = cyc.modulus;
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = i + 1; j < chars.size(); ++j) {
      const std::int64_t e = ((chars[j].e - chars[i].e) % M + M) % M;
      const Fq a = F.div(chars[j].a, chars[i].a);
      const bool trivial = e == 0 && a == F.one();
      const bool cyclo = e == cyc.e_cyc % M && a == cyc.a_cyc;
      if (trivial || cyclo) {
        out.holds = false;
        out.violations.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  return out;
}

C2BResult check_c2b(const std::vector<Rank1Kisin>& seq, int p) {
  auto all = [](const std::vector<int>& t, int v) {
    return std::all_of(t.begin(), t.end(), [v](int x) { return x == v; });
  };
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!all(seq[i].t, 0)) continue;
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (all(seq[j].t, p)) return C2BResult{false, std::make_pair(static_cast<int>(i), static_cast<int>(j))};
  }
  return C2BResult{};
}

std::vector<int> CaseSet::satisfied() const {
  std::vector<int> out;
  for (const auto& c : cases)
    if (c.holds) out.push_back(c.id);
  return out;
}

CaseSet corollary_cases(const GaloisField& F, const WeightTemplate& w, const std::optional<std::vector<CharClass>>& chars,
                        const CycloClass& cyc, int p) {
  const bool c2a = chars.has_value() && check_c2a(F, *chars, cyc).holds;
  const auto missing_pm1 = first_column_without(w, p - 1);
  const auto missing_p = first_column_without(w, p);
  const bool no_one = no_difference_one(w);
  bool in_range = true;
  for (const auto& h : w.h)
    for (int x : h)
      if (x < 0 || x > p - 1) in_range = false;

  CaseSet out;
  out.cases.push_back({1, w.f() == 1 && !has_difference(w.h[0], p - 1) && c2a, {}, {}});
  out.cases.push_back({2, no_one && missing_pm1.has_value() && c2a, missing_pm1, {}});
  out.cases.push_back({3, no_one && missing_pm1.has_value() && missing_p.has_value(), missing_pm1, missing_p});
  out.cases.push_back({4, in_range && missing_pm1.has_value(), missing_pm1, {}});
  return out;
}

void SerreWeight::validate() const {
  if (a.empty() || a.front().empty()) throw InvalidInput("Serre weight needs at least one nonempty row");
  for (const auto& row : a) {
    if (row.size() != a.front().size()) throw InvalidInput("Serre weight rows must have equal length");
    for (std::size_t i = 1; i < row.size(); ++i)
      if (row[i - 1] < row[i]) throw InvalidInput("Serre weight rows must be weakly decreasing");
  }
}

bool SerreWeight::serre_bound(int p) const {
  for (const auto& row : a)
    if (row.front() - row.back() > p - 1) return false;
  return true;
}

bool SerreWeight::standing_bound(int p) const {
  for (const auto& row : a)
    if (row.front() - row.back() > p - d() + 1) return false;
  return true;
}

WeightTemplate serre_to_hodge(const SerreWeight& w) {
  w.validate();
  const int d = w.d();
  WeightTemplate out;
  for (const auto& row : w.a) {
    std::vector<int> h;
    for (int i = 0; i < d; ++i) h.push_back(row[sz(i)] - row.back() + d - 1 - i);
    std::sort(h.begin(), h.end());
    out.h.push_back(std::move(h));
  }
  return out;
}

CaseSet application_conditions(const GaloisField& F, const SerreWeight& w,
                               const std::optional<std::vector<CharClass>>& chars, const CycloClass& cyc, int p) {
  w.validate();
  const int f = w.f(), d = w.d();
  const bool c2a = chars.has_value() && check_c2a(F, *chars, cyc).holds;
  bool distinct = true;
  for (const auto& row : w.a)
    for (int i = 0; i + 1 < d; ++i)
      if (row[sz(i)] == row[sz(i + 1)]) distinct = false;
  std::optional<int> s0, s0p, s0_small;
  bool all_small = true;
  for (int s = 0; s < f; ++s) {
    if (!s0 && row_avoids(w, s, p - 1)) s0 = s;
    if (!s0p && spread(w, s) != p) s0p = s;
    if (spread(w, s) > p - 1) all_small = false;
    if (!s0_small && spread(w, s) <= p - 2) s0_small = s;
  }
  CaseSet out;
  out.cases.push_back({1, f == 1 && row_avoids(w, 0, p - 1) && c2a, {}, {}});
  out.cases.push_back({2, distinct && s0.has_value() && c2a, s0, {}});
  out.cases.push_back({3, distinct && s0.has_value() && s0p.has_value(), s0, s0p});
  out.cases.push_back({4, all_small && s0_small.has_value(), s0_small, {}});
  return out;
}

GateReport evaluate_gate(const GaloisField& F, const WeightTemplate& w, const std::optional<std::vector<CharClass>>& chars,
                         const CycloClass& cyc, int p, const std::optional<SerreWeight>& serre) {
  GateReport g;
  bool template_ok = true;
  try {
    w.validate(p);
  } catch (const InvalidInput&) {
    template_ok = false;
  }
  if (chars) {
    g.c2a = check_c2a(F, *chars, cyc).holds;
    if (template_ok) {
      const C1Result c1 = check_c1(*chars, w, p);
      g.c1 = c1.unique;
      if (c1.unique) {
        const Model& m = c1.models.front();
        std::vector<Rank1Kisin> seq;
        for (int i = 0; i < m.d; ++i) seq.push_back(Rank1Kisin{m.row(i), (*chars)[sz(i)].a});
        g.c2b = check_c2b(seq, p).holds;
      }
    }
  } else if (template_ok) {
    g.c1 = !c1_sufficient(w, p).empty();
  }
  // With p missing from some column no model row can be (p, ..., p).
  if (!g.c2b && template_ok && first_column_without(w, p)) g.c2b = true;
  g.corollary_cases = corollary_cases(F, w, chars, cyc, p).satisfied();
  if (serre) {
    g.application_cases = application_conditions(F, *serre, chars, cyc, p).satisfied();
    g.serre_bound_ok = serre->serre_bound(p);
    g.standing_bound_ok = serre->standing_bound(p);
  }
  g.theorem_main_gate = g.c1 && (g.c2a.value_or(false) || g.c2b.value_or(false));
  return g;
}

}  // namespace kisin
