#pragma once

#include <cstdint>
#include <vector>

#include "kisin/field.hpp"
#include "kisin/rank1.hpp"
#include "kisin/series.hpp"

namespace kisin {

// Upper-triangular Frobenius data: A[s] is d x d with diagonal entries
// (a_i)_s u^{t[i][s]}, where (a_i)_0 = a_i and (a_i)_s = 1 for s > 0.
struct TriangularKisin {
  int d = 0;
  int f = 0;
  std::vector<std::vector<int>> t;  // t[i][s]
  std::vector<Fq> a;
  std::vector<SeriesMatrix> A;

  static TriangularKisin diagonal(const SeriesRing& R, const std::vector<std::vector<int>>& t, const std::vector<Fq>& a);
  // Assembles a module from its diagonal factors.
  static TriangularKisin from_chain(const SeriesRing& R, const std::vector<Rank1Kisin>& chain);

  Fq unit(int i, int s) const;
  TruncSeries& x(int s, int i, int j) { return A[static_cast<std::size_t>(s)](i, j); }
  const TruncSeries& x(int s, int i, int j) const { return A[static_cast<std::size_t>(s)](i, j); }
  Rank1Kisin factor(int i) const;
  bool distinct_weights() const;

  // Throws InvalidInput unless the matrices are upper triangular with the
  // prescribed diagonal.
  void validate(const SeriesRing& R) const;

  friend bool operator==(const TriangularKisin&, const TriangularKisin&) = default;
};

TriangularKisin embed(const SeriesRing& R, const TriangularKisin& M);

struct EntryShape {
  int s;
  int i;
  int j;
  bool deg_ok;   // deg x < t_{j,s}
  bool p_shape;  // x = u^{t_{i,s}} y with y constant if t_{j,s} > t_{i,s}, else x = 0
};

struct ExtraTermSlot {
  int i;
  int j;
  int s0;
  int degree;
};

struct ShapeClass {
  std::vector<EntryShape> entries;
  bool deg_ok = true;
  bool p_shape = true;
  std::vector<ExtraTermSlot> extra_term_slots;
  int free_slots = 0;  // #{(i, j, s) : i < j, t_{j,s} > t_{i,s}}
};

ShapeClass classify_shape(const TriangularKisin& M, int p);

// Column j of A[s] minus c[s] times column i, for every component s.
struct AllowableMove {
  int i = 0;
  int j = 0;
  std::vector<Fq> c;
  friend bool operator==(const AllowableMove&, const AllowableMove&) = default;
};

TriangularKisin allowable_procedure(const SeriesRing& R, const TriangularKisin& M, const AllowableMove& move);
TriangularKisin replay(const SeriesRing& R, TriangularKisin M, const std::vector<AllowableMove>& moves);
std::vector<AllowableMove> inverse_moves(const GaloisField& F, const std::vector<AllowableMove>& moves);

struct Normalization {
  TriangularKisin diagonal;
  std::vector<AllowableMove> moves;
};

// Clears column d-1 from the bottom up, then column d-2, and so on.
Normalization normalize_to_diagonal(const SeriesRing& R, const TriangularKisin& M);

std::vector<bool> column_divisibility(const SeriesRing& R, const SeriesMatrix& X, const FqMatrix& A,
                                      const std::vector<int>& t);

struct ShapeVerifyConfig {
  int d = 2;
  std::vector<int> t;
  bool exhaustive = true;
  std::uint64_t trials = 0;       // random mode only
  std::uint64_t seed = 1;
  std::uint64_t budget = 1u << 22;  // maximal number of X in exhaustive mode
};

struct ShapeCounterexample {
  SeriesMatrix X;
  FqMatrix A;
};

struct ShapeVerifyReport {
  ShapeVerifyConfig config;
  std::uint64_t x_checked = 0;
  std::uint64_t x_without_p = 0;  // X violating the conclusion, hypothesis aside
  std::uint64_t gl_order = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t hypothesis_pairs = 0;
  std::vector<ShapeCounterexample> counterexamples;
  bool last_weight_max = false;
  bool first_weight_max = false;
};

// For upper-triangular X with diagonal u^{t_i} and deg x_{ij} < t_j, and
// every A in GL_d(k_E) with u^{t_i} | col_i(XA), checks that X satisfies
// the p_shape conclusion.
ShapeVerifyReport shapelemma_verify(const GaloisField& F, const ShapeVerifyConfig& config);

struct DiagRecovery {
  bool triangular = false;
  std::vector<int> t;
  bool holds = true;  // vacuous unless triangular
};

// M = B diag(u^{r_i}) A with B invertible over k_E[[u]] and A invertible
// with entries in k_E[[u^p]].
DiagRecovery diag_recovery_check(const SeriesRing& R, const SeriesMatrix& B, const std::vector<int>& r,
                                 const SeriesMatrix& A);

// H invertible over k_E[[u]] (a product of row swaps and unipotent row
// operations) such that H P is upper triangular modulo u^N.
SeriesMatrix left_triangularizer(const SeriesRing& R, const SeriesMatrix& P);

}  // namespace kisin
