#include <gtest/gtest.h>

#include <set>

#include "kisin/errors.hpp"
#include "kisin/rank1.hpp"

using namespace kisin;

namespace {

std::vector<std::vector<int>> all_vectors(int f, int lo, int hi) {
  std::vector<std::vector<int>> out{{}};
  for (int s = 0; s < f; ++s) {
    std::vector<std::vector<int>> next;
    for (const auto& v : out)
      for (int x = lo; x <= hi; ++x) {
        auto w = v;
        w.push_back(x);
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

// Every decomposition of diff into cyclic runs, found by trying every
// nonempty set of cut points and checking each arc is a valid run.
struct Arc {
  int start;
  int length;
  int kind;  // 0 zero, 1 plus, -1 minus
};

int arc_kind(const std::vector<int>& diff, int start, int len, int p) {
  const int f = static_cast<int>(diff.size());
  auto at = [&](int k) { return diff[(start + k) % f]; };
  bool zero = true;
  for (int k = 0; k < len; ++k) zero = zero && at(k) == 0;
  if (zero) return 0;
  if (len < 2) return 2;
  for (int sign : {1, -1}) {
    bool ok = true;
    for (int k = 0; k < len; ++k) {
      const int want = k == 0 ? -1 : (k == len - 1 ? p : p - 1);
      ok = ok && at(k) == sign * want;
    }
    if (ok) return sign;
  }
  return 2;
}

std::vector<std::vector<Arc>> all_decompositions(const std::vector<int>& diff, int p) {
  const int f = static_cast<int>(diff.size());
  std::vector<std::vector<Arc>> out;
  for (int mask = 1; mask < (1 << f); ++mask) {
    std::vector<int> cuts;
    for (int s = 0; s < f; ++s)
      if (mask & (1 << s)) cuts.push_back(s);
    std::vector<Arc> arcs;
    bool ok = true;
    for (std::size_t k = 0; k < cuts.size() && ok; ++k) {
      const int start = cuts[k];
      const int next = k + 1 < cuts.size() ? cuts[k + 1] : cuts[0] + f;
      const int len = next - start;
      const int kind = arc_kind(diff, start, len, p);
      ok = kind != 2;
      arcs.push_back({start, len, kind});
    }
    if (ok) out.push_back(arcs);
  }
  return out;
}

std::int64_t weighted(const std::vector<int>& v, int p) {
  std::int64_t s = 0;
  for (int x : v) s = s * p + x;
  return s;
}

}  // namespace

TEST(Alpha, Examples) {
  GaloisField F(3, 1);
  EXPECT_EQ(alpha_invariant({{0}, F.one()}, 3)[0], Rational(0));
  const auto a22 = alpha_invariant({{2, 2}, F.one()}, 3);
  EXPECT_EQ(a22[0], Rational(1));
  EXPECT_EQ(a22[1], Rational(1));
  const auto a10 = alpha_invariant({{1, 0}, F.one()}, 3);
  EXPECT_EQ(a10[0], Rational(1, 8));
  EXPECT_EQ(a10[1], Rational(3, 8));
}

TEST(Alpha, RecurrenceHoldsExhaustively) {
  GaloisField F(3, 1);
  for (int p : {3, 5})
    for (int f = 1; f <= 3; ++f)
      for (const auto& t : all_vectors(f, 0, p)) {
        const auto a = alpha_invariant({t, F.one()}, p);
        for (int s = 0; s < f; ++s) EXPECT_EQ(a[s] + t[s], p * a[(s + f - 1) % f]);
        EXPECT_EQ(a[f - 1] * Rational(residue_modulus(p, f)), Rational(weighted_sum(t, p)));
      }
}

TEST(Rank1, IsoExamples) {
  GaloisField F(3, 1);
  const Fq a = F.one(), b = F.from_int(2);
  EXPECT_TRUE(iso_as_ginf({{1, 2}, a}, {{1, 2}, a}, 3));
  EXPECT_TRUE(iso_as_ginf({{3}, a}, {{1}, a}, 3));
  EXPECT_FALSE(iso_as_ginf({{1, 2}, a}, {{1, 2}, b}, 3));
}

TEST(Rank1, HomExamples) {
  GaloisField F(3, 1);
  const Fq a = F.one();
  EXPECT_TRUE(hom_exists({{1, 3}, a}, {{1, 3}, a}, 3));
  EXPECT_TRUE(hom_exists({{2}, a}, {{0}, a}, 3));
  EXPECT_FALSE(hom_exists({{0}, a}, {{2}, a}, 3));
}

TEST(Rank1, CriteriaAgreeExhaustively) {
  GaloisField F(3, 1);
  const int p = 3;
  for (int f = 1; f <= 3; ++f) {
    const auto ts = all_vectors(f, 0, p);
    for (const auto& t : ts)
      for (const auto& u : ts)
        for (Fq a : F.units())
          for (Fq b : F.units()) {
            const Rank1Kisin n{t, a}, m{u, b};
            EXPECT_EQ(iso_as_ginf(n, m, p), iso_by_alpha(n, m, p));
            if (hom_exists(n, m, p) && hom_exists(m, n, p)) EXPECT_TRUE(iso_as_ginf(n, m, p));
          }
  }
}

TEST(Gls, Examples) {
  EXPECT_EQ(classify_gls(std::vector<int>{2, 2}, 3).kind, GlsKind::AllPMinusOnePlus);
  const auto d = classify_gls(std::vector<int>{-1, 3}, 3);
  ASSERT_EQ(d.kind, GlsKind::StringList);
  ASSERT_EQ(d.strings.size(), 1u);
  EXPECT_EQ(d.strings[0], (GlsString{StringKind::Plus, 0, 2}));
  const auto z = classify_gls(std::vector<int>{0, 0, 0, 0}, 3);
  ASSERT_EQ(z.strings.size(), 1u);
  EXPECT_EQ(z.strings[0], (GlsString{StringKind::Zero, 0, 4}));
  EXPECT_THROW(classify_gls(std::vector<int>{1, 0}, 3), InvalidInput);
  EXPECT_THROW(classify_gls(std::vector<int>{4, 0}, 3), InvalidInput);
}

TEST(Gls, WrappingRun) {
  const auto d = classify_gls(std::vector<int>{3, -1}, 3);
  ASSERT_EQ(d.strings.size(), 1u);
  EXPECT_EQ(d.strings[0], (GlsString{StringKind::Plus, 1, 2}));
}

TEST(Gls, ReassemblesAndCountsExhaustively) {
  for (int p : {3, 5})
    for (int f = 1; f <= 4; ++f)
      for (const auto& diff : all_vectors(f, -p, p)) {
        if (weighted(diff, p) % residue_modulus(p, f) != 0) continue;
        const auto decomps = all_decompositions(diff, p);
        const bool all_pm1 = std::all_of(diff.begin(), diff.end(), [&](int x) { return x == p - 1; }) ||
                             std::all_of(diff.begin(), diff.end(), [&](int x) { return x == 1 - p; });
        // Every admissible vector has a decomposition; the two exceptional
        // constant vectors have none.
        ASSERT_EQ(decomps.empty(), all_pm1);
        const auto g = classify_gls(diff, p);
        EXPECT_EQ(g.reassemble(f, p), diff);
        if (!all_pm1) EXPECT_EQ(g.multiplicity, decomps.size());
      }
}

TEST(Gls, CharsWithWeightString) {
  EXPECT_EQ(chars_with_weight_string(0, 3, 3, 1), (std::vector<std::vector<int>>{{0}, {2}}));
  EXPECT_EQ(chars_with_weight_string(1, 3, 3, 1), (std::vector<std::vector<int>>{{1}, {3}}));
  EXPECT_EQ(chars_with_weight_string(0, 0, 3, 2), (std::vector<std::vector<int>>{{0, 0}}));
}
