#include "kisin/models.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "kisin/errors.hpp"
#include "kisin/rank1.hpp"

namespace kisin {

void WeightTemplate::validate(int p) const {
  if (h.empty()) throw InvalidInput("weight template needs at least one column");
  const std::size_t d = h.front().size();
  if (d == 0) throw InvalidInput("weight template columns must be nonempty");
  for (const auto& col : h) {
    if (col.size() != d) throw InvalidInput("weight template columns differ in size");
    for (int x : col)
      if (x < 0 || x > p) throw InvalidInput("weight template entry outside [0, p]");
    auto sorted = col;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidInput("weight template column has repeated entries");
  }
}

Model Model::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) return Model();
  Model m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.d; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.f)
      throw InvalidInput("ragged model rows");
    for (int s = 0; s < m.f; ++s) m.at(i, s) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
  }
  return m;
}

std::vector<int> Model::row(int i) const {
  return {n.begin() + static_cast<std::ptrdiff_t>(i) * f, n.begin() + static_cast<std::ptrdiff_t>(i + 1) * f};
}

std::vector<std::vector<int>> Model::rows() const {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < d; ++i) out.push_back(row(i));
  return out;
}

std::int64_t row_residue(const Model& m, int i, int p) { return weighted_residue(m.row(i), p); }

CharClass char_of_row(const Model& m, int i, Fq unit, int p) { return CharClass{row_residue(m, i, p), unit}; }

bool is_model(const Model& m, std::span<const CharClass> chars, const WeightTemplate& w, int p) {
  if (m.d != w.d() || m.f != w.f() || static_cast<int>(chars.size()) != m.d) return false;
  const std::int64_t M = residue_modulus(p, m.f);
  for (int s = 0; s < m.f; ++s) {
    std::vector<int> col;
    for (int i = 0; i < m.d; ++i) col.push_back(m.at(i, s));
    std::sort(col.begin(), col.end());
    auto h = w.h[static_cast<std::size_t>(s)];
    std::sort(h.begin(), h.end());
    if (col != h) return false;
  }
  for (int i = 0; i < m.d; ++i) {
    const std::int64_t e = ((chars[static_cast<std::size_t>(i)].e % M) + M) % M;
    if (row_residue(m, i, p) != e) return false;
  }
  return true;
}

namespace {

class ModelSearch {
 public:
  ModelSearch(std::span<const CharClass> chars, const WeightTemplate& w, int p)
      : w_(w), d_(w.d()), f_(w.f()), M_(residue_modulus(p, w.f())), cur_(w.d(), w.f()) {
    for (const auto& c : chars) target_.push_back(((c.e % M_) + M_) % M_);
    weight_.resize(static_cast<std::size_t>(f_));
    for (int s = 0; s < f_; ++s) weight_[static_cast<std::size_t>(s)] = int_pow(p, f_ - 1 - s);
    // rest_lo[s], rest_hi[s]: range of the contribution of columns s..f-1.
    rest_lo_.assign(static_cast<std::size_t>(f_) + 1, 0);
    rest_hi_.assign(static_cast<std::size_t>(f_) + 1, 0);
    for (int s = f_ - 1; s >= 0; --s) {
      const auto& col = w.h[static_cast<std::size_t>(s)];
      const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
      rest_lo_[static_cast<std::size_t>(s)] = rest_lo_[static_cast<std::size_t>(s) + 1] + weight_[static_cast<std::size_t>(s)] * *lo;
      rest_hi_[static_cast<std::size_t>(s)] = rest_hi_[static_cast<std::size_t>(s) + 1] + weight_[static_cast<std::size_t>(s)] * *hi;
    }
    partial_.assign(static_cast<std::size_t>(d_), 0);
    used_.assign(static_cast<std::size_t>(f_), std::vector<bool>(static_cast<std::size_t>(d_), false));
  }

  std::vector<Model> run() {
    place(0, 0);
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  bool reachable(int i, int next_col) const {
    const std::int64_t lo = partial_[static_cast<std::size_t>(i)] + rest_lo_[static_cast<std::size_t>(next_col)];
    const std::int64_t hi = partial_[static_cast<std::size_t>(i)] + rest_hi_[static_cast<std::size_t>(next_col)];
    std::int64_t r = (target_[static_cast<std::size_t>(i)] - lo) % M_;
    if (r < 0) r += M_;
    return lo + r <= hi;
  }

  void place(int s, int i) {
    if (s == f_) {
      out_.push_back(cur_);
      return;
    }
    if (i == d_) {
      place(s + 1, 0);
      return;
    }
    const auto& col = w_.h[static_cast<std::size_t>(s)];
    auto& used = used_[static_cast<std::size_t>(s)];
    for (int k = 0; k < d_; ++k) {
      if (used[static_cast<std::size_t>(k)]) continue;
      const int v = col[static_cast<std::size_t>(k)];
      partial_[static_cast<std::size_t>(i)] += weight_[static_cast<std::size_t>(s)] * v;
      if (reachable(i, s + 1)) {
        used[static_cast<std::size_t>(k)] = true;
        cur_.at(i, s) = v;
        place(s, i + 1);
        used[static_cast<std::size_t>(k)] = false;
      }
      partial_[static_cast<std::size_t>(i)] -= weight_[static_cast<std::size_t>(s)] * v;
    }
  }

  const WeightTemplate& w_;
  int d_;
  int f_;
  std::int64_t M_;
  Model cur_;
  std::vector<std::int64_t> target_;
  std::vector<std::int64_t> weight_;
  std::vector<std::int64_t> rest_lo_;
  std::vector<std::int64_t> rest_hi_;
  std::vector<std::int64_t> partial_;
  std::vector<std::vector<bool>> used_;
  std::vector<Model> out_;
};

}  // namespace

std::vector<Model> enumerate_models(std::span<const CharClass> chars, const WeightTemplate& w, int p) {
  w.validate(p);
  if (static_cast<int>(chars.size()) != w.d()) throw InvalidInput("character count does not match template size");
  return ModelSearch(chars, w, p).run();
}

C1Result check_c1(std::span<const CharClass> chars, const WeightTemplate& w, int p) {
  C1Result r;
  r.models = enumerate_models(chars, w, p);
  r.unique = r.models.size() == 1;
  return r;
}

namespace {

bool has_difference(const std::vector<int>& col, int delta) {
  for (int x : col)
    for (int y : col)
      if (x - y == delta) return true;
  return false;
}

bool contains(const std::vector<int>& col, int v) { return std::find(col.begin(), col.end(), v) != col.end(); }

}  // namespace

std::vector<int> c1_sufficient(const WeightTemplate& w, int p) {
  std::vector<int> out;
  const bool missing_pm1 =
      std::any_of(w.h.begin(), w.h.end(), [&](const auto& col) { return !contains(col, p - 1); });
  if (w.f() == 1 && !has_difference(w.h[0], p - 1)) out.push_back(1);
  if (missing_pm1 && std::none_of(w.h.begin(), w.h.end(), [](const auto& col) { return has_difference(col, 1); }))
    out.push_back(2);
  const bool bounded = std::all_of(w.h.begin(), w.h.end(), [&](const auto& col) {
    return std::all_of(col.begin(), col.end(), [&](int x) { return x >= 0 && x <= p - 1; });
  });
  if (bounded && missing_pm1) out.push_back(3);
  return out;
}

C3Result check_c3(const WeightTemplate& w, int p) {
  for (int s = 0; s < w.f(); ++s)
    if (!has_difference(w.h[static_cast<std::size_t>(s)], p - 1)) return C3Result{true, s};
  return C3Result{};
}

namespace {

bool segment_matches(const Model& m, const PlsMove& mv, int p) {
  if (mv.length < 2 || mv.length > m.f || mv.start < 0 || mv.start >= m.f) return false;
  if (mv.row_a < 0 || mv.row_b < 0 || mv.row_a >= m.d || mv.row_b >= m.d || mv.row_a == mv.row_b) return false;
  if (mv.sign != 1 && mv.sign != -1) return false;
  for (int k = 0; k < mv.length; ++k) {
    const int s = (mv.start + k) % m.f;
    int want = p - 1;
    if (mv.pattern == PlsPattern::Carry) want = k == 0 ? -1 : (k == mv.length - 1 ? p : p - 1);
    if (m.at(mv.row_a, s) - m.at(mv.row_b, s) != mv.sign * want) return false;
  }
  return true;
}

}  // namespace

std::vector<PlsMove> pls_moves(const Model& m, int p, PlsMode mode) {
  const int starts = mode == PlsMode::Cyclic ? m.f : 1;
  std::vector<PlsMove> out;
  for (int a = 0; a < m.d; ++a)
    for (int b = a + 1; b < m.d; ++b)
      for (int len = 2; len <= m.f; ++len)
        for (int start = 0; start < starts; ++start) {
          bool found = false;
          for (PlsPattern pat : {PlsPattern::AllPMinusOne, PlsPattern::Carry})
            for (int sign : {1, -1}) {
              PlsMove mv{a, b, start, len, sign, pat};
              if (!found && segment_matches(m, mv, p)) {
                out.push_back(mv);
                found = true;
              }
            }
          // A full-length segment is the same swap from every start.
          if (found && len == m.f) break;
        }
  return out;
}

PlsResult pls_apply(const Model& m, const PlsMove& move, int p) {
  if (!segment_matches(m, move, p)) throw InvalidMove("segment difference does not match the move pattern");
  PlsResult r{m, true};
  for (int k = 0; k < move.length; ++k) {
    const int s = (move.start + k) % m.f;
    std::swap(r.model.at(move.row_a, s), r.model.at(move.row_b, s));
  }
  for (int i = 0; i < m.d; ++i)
    if (row_residue(r.model, i, p) != row_residue(m, i, p)) r.valid = false;
  return r;
}

std::vector<std::vector<Model>> pls_reachability(std::span<const CharClass> chars, const WeightTemplate& w, int p,
                                                 PlsMode mode) {
  const std::vector<Model> models = enumerate_models(chars, w, p);
  std::map<Model, int> index;
  for (std::size_t k = 0; k < models.size(); ++k) index.emplace(models[k], static_cast<int>(k));
  std::vector<int> comp(models.size(), -1);
  std::vector<std::vector<Model>> out;
  for (std::size_t root = 0; root < models.size(); ++root) {
    if (comp[root] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::deque<int> queue{static_cast<int>(root)};
    comp[root] = id;
    while (!queue.empty()) {
      const int cur = queue.front();
      queue.pop_front();
      const Model& m = models[static_cast<std::size_t>(cur)];
      out.back().push_back(m);
      for (const auto& mv : pls_moves(m, p, mode)) {
        const PlsResult r = pls_apply(m, mv, p);
        if (!r.valid) continue;
        const auto it = index.find(r.model);
        if (it == index.end()) throw InvalidMove("residue-preserving swap left the model set");
        if (comp[static_cast<std::size_t>(it->second)] < 0) {
          comp[static_cast<std::size_t>(it->second)] = id;
          queue.push_back(it->second);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

}  // namespace kisin
