#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "kisin/field.hpp"

namespace kisin {

using Rational = boost::rational<std::int64_t>;

// Rank-1 module with phi(e_{s-1}) = (a)_s u^{t_s} e_s, where (a)_0 = a and
// (a)_s = 1 otherwise.
struct Rank1Kisin {
  std::vector<int> t;
  Fq a;
  friend bool operator==(const Rank1Kisin&, const Rank1Kisin&) = default;
};

std::int64_t int_pow(std::int64_t base, int exp);

// p^f - 1, the modulus of weighted residues.
std::int64_t residue_modulus(int p, int f);

// sum_s p^{f-1-s} t_s, reduced into [0, p^f - 1).
std::int64_t weighted_residue(std::span<const int> t, int p);
std::int64_t weighted_sum(std::span<const int> t, int p);

std::vector<Rational> alpha_invariant(const Rank1Kisin& n, int p);

// Isomorphism of the associated G_infinity characters via the weighted
// congruence.
bool iso_as_ginf(const Rank1Kisin& n, const Rank1Kisin& m, int p);
// The same question answered through alpha differences.
bool iso_by_alpha(const Rank1Kisin& n, const Rank1Kisin& m, int p);
bool hom_exists(const Rank1Kisin& from, const Rank1Kisin& to, int p);

enum class StringKind { Zero, Plus, Minus };

// A cyclic run of the difference vector. Plus runs read (-1, p-1, ..., p-1, p),
// Minus runs are their negatives.
struct GlsString {
  StringKind kind;
  int start;
  int length;
  friend bool operator==(const GlsString&, const GlsString&) = default;
};

enum class GlsKind { AllPMinusOnePlus, AllPMinusOneMinus, StringList };

struct GlsDecomposition {
  GlsKind kind;
  std::vector<GlsString> strings;  // ordered by start, zero runs maximal
  // Number of decompositions obtained by also splitting zero runs.
  std::uint64_t multiplicity = 1;

  std::vector<int> reassemble(int f, int p) const;
};

GlsDecomposition classify_gls(std::span<const int> diff, int p);

// All t in [0, range_max]^f with weighted residue equal to target, in
// lexicographic order.
std::vector<std::vector<int>> chars_with_weight_string(std::int64_t target, int range_max, int p, int f);

}  // namespace kisin
