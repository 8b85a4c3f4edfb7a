#include "kisin/rank1.hpp"

#include <algorithm>

#include "kisin/errors.hpp"

namespace kisin {

std::int64_t int_pow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

std::int64_t residue_modulus(int p, int f) { return int_pow(p, f) - 1; }

std::int64_t weighted_sum(std::span<const int> t, int p) {
  const int f = static_cast<int>(t.size());
  std::int64_t s = 0;
  for (int i = 0; i < f; ++i) s += int_pow(p, f - 1 - i) * t[static_cast<std::size_t>(i)];
  return s;
}

std::int64_t weighted_residue(std::span<const int> t, int p) {
  const std::int64_t M = residue_modulus(p, static_cast<int>(t.size()));
  std::int64_t r = weighted_sum(t, p) % M;
  return r < 0 ? r + M : r;
}

std::vector<Rational> alpha_invariant(const Rank1Kisin& n, int p) {
  const int f = static_cast<int>(n.t.size());
  if (f == 0) throw InvalidInput("empty weight string");
  const std::int64_t M = residue_modulus(p, f);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(f));
  for (int s = 0; s < f; ++s) {
    std::int64_t num = 0;
    for (int j = 1; j <= f; ++j) num += int_pow(p, f - j) * n.t[static_cast<std::size_t>((j + s) % f)];
    out.emplace_back(num, M);
  }
  return out;
}

bool iso_as_ginf(const Rank1Kisin& n, const Rank1Kisin& m, int p) {
  if (n.t.size() != m.t.size()) throw InvalidInput("weight strings of different length");
  return n.a == m.a && weighted_residue(n.t, p) == weighted_residue(m.t, p);
}

bool iso_by_alpha(const Rank1Kisin& n, const Rank1Kisin& m, int p) {
  if (n.t.size() != m.t.size()) throw InvalidInput("weight strings of different length");
  if (n.a != m.a) return false;
  const auto an = alpha_invariant(n, p), am = alpha_invariant(m, p);
  for (std::size_t s = 0; s < an.size(); ++s)
    if ((an[s] - am[s]).denominator() == 1) return true;
  return false;
}

bool hom_exists(const Rank1Kisin& from, const Rank1Kisin& to, int p) {
  if (from.t.size() != to.t.size()) throw InvalidInput("weight strings of different length");
  if (from.a != to.a) return false;
  const auto a = alpha_invariant(from, p), b = alpha_invariant(to, p);
  for (std::size_t s = 0; s < a.size(); ++s) {
    const Rational d = a[s] - b[s];
    if (d.denominator() != 1 || d.numerator() < 0) return false;
  }
  return true;
}

std::vector<int> GlsDecomposition::reassemble(int f, int p) const {
  std::vector<int> out(static_cast<std::size_t>(f), 0);
  if (kind != GlsKind::StringList) {
    std::fill(out.begin(), out.end(), kind == GlsKind::AllPMinusOnePlus ? p - 1 : -(p - 1));
    return out;
  }
  for (const auto& s : strings) {
    if (s.kind == StringKind::Zero) continue;
    const int sign = s.kind == StringKind::Plus ? 1 : -1;
    for (int k = 0; k < s.length; ++k) {
      int v = k == 0 ? -1 : (k == s.length - 1 ? p : p - 1);
      out[static_cast<std::size_t>((s.start + k) % f)] = sign * v;
    }
  }
  return out;
}

GlsDecomposition classify_gls(std::span<const int> diff, int p) {
  const int f = static_cast<int>(diff.size());
  if (f == 0) throw InvalidInput("empty difference vector");
  for (int x : diff)
    if (x < -p || x > p) throw InvalidInput("difference entry outside [-p, p]");
  if (weighted_residue(diff, p) != 0) throw InvalidInput("weighted sum is not divisible by p^f - 1");

  auto at = [&](int i) { return diff[static_cast<std::size_t>(((i % f) + f) % f)]; };

  if (std::all_of(diff.begin(), diff.end(), [&](int x) { return x == p - 1; }))
    return {GlsKind::AllPMinusOnePlus, {}, 1};
  if (std::all_of(diff.begin(), diff.end(), [&](int x) { return x == -(p - 1); }))
    return {GlsKind::AllPMinusOneMinus, {}, 1};
  if (std::all_of(diff.begin(), diff.end(), [](int x) { return x == 0; }))
    return {GlsKind::StringList, {{StringKind::Zero, 0, f}}, (std::uint64_t{1} << f) - 1};

  // Begin parsing at a position where some run must start.
  int begin = -1;
  for (int i = 0; i < f && begin < 0; ++i) {
    if (at(i) == 1 || at(i) == -1 || (at(i) == 0 && at(i - 1) != 0)) begin = i;
  }
  if (begin < 0) throw ClassificationError("no run boundary in difference vector");

  GlsDecomposition out{GlsKind::StringList, {}, 1};
  int pos = 0;
  while (pos < f) {
    const int i = begin + pos;
    const int x = at(i);
    if (x == 0) {
      int len = 0;
      while (pos + len < f && at(i + len) == 0) ++len;
      out.strings.push_back({StringKind::Zero, i % f, len});
      out.multiplicity <<= (len - 1);
      pos += len;
      continue;
    }
    if (x != 1 && x != -1) throw ClassificationError("run does not start with +-1");
    const int sign = x == -1 ? 1 : -1;
    int len = 1;
    while (pos + len < f && at(i + len) == sign * (p - 1)) ++len;
    if (pos + len >= f || at(i + len) != sign * p)
      throw ClassificationError("run does not end with +-p");
    ++len;
    out.strings.push_back({sign > 0 ? StringKind::Plus : StringKind::Minus, i % f, len});
    pos += len;
  }
  std::sort(out.strings.begin(), out.strings.end(),
            [](const GlsString& a, const GlsString& b) { return a.start < b.start; });
  return out;
}

std::vector<std::vector<int>> chars_with_weight_string(std::int64_t target, int range_max, int p, int f) {
  if (range_max < 0) throw InvalidInput("range_max must be nonnegative");
  if (f < 1) throw InvalidInput("f must be positive");
  const std::int64_t M = residue_modulus(p, f);
  const std::int64_t want = ((target % M) + M) % M;
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(f), 0);
  while (true) {
    if (weighted_residue(t, p) == want) out.push_back(t);
    int k = f - 1;
    while (k >= 0 && t[static_cast<std::size_t>(k)] == range_max) {
      t[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    ++t[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace kisin
