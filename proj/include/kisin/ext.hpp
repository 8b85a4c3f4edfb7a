#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kisin/shape.hpp"

namespace kisin {

enum class ShapeTag { Raw, ExtShape, PhiShape };

std::string to_string(ShapeTag tag);
ShapeTag parse_shape_tag(const std::string& s);

// Block Frobenius data [[A_s, C_s], [0, A'_s]] with A from `sub` and A'
// from `quot`. Component s receives phi of component s-1.
struct ExtProblem {
  TriangularKisin sub;
  TriangularKisin quot;
  int r = 0;  // height

  int k() const { return sub.d; }
  int kq() const { return quot.d; }
  int f() const { return sub.f; }
  void validate() const;
};

ExtProblem make_problem(const TriangularKisin& sub, const TriangularKisin& quot, int p, std::optional<int> r = {});

using Cochain = std::vector<SeriesMatrix>;  // one k x k' matrix per component

struct ExtClass {
  Cochain C;
  ShapeTag tag = ShapeTag::Raw;
};

struct EquivWitness {
  Cochain W;
  int precision = 0;
};

Cochain zero_cochain(const SeriesRing& R, const ExtProblem& problem);

// (W_s A'_s - A_s phi(W_{s-1}))_s
Cochain coboundary(const SeriesRing& R, const ExtProblem& problem, const Cochain& W);

// C_s + A_s phi(W_{s-1}) - W_s A'_s
Cochain block_basis_change(const SeriesRing& R, const ExtProblem& problem, const Cochain& C, const Cochain& W);

SeriesMatrix block_matrix(const SeriesRing& R, const ExtProblem& problem, const Cochain& C, int s);

// Upper-right block of [[1, -W_s], [0, 1]] [[A_s, C_s], [0, A'_s]] [[1, phi(W_{s-1})], [0, 1]],
// computed with full block matrices.
Cochain block_conjugate(const SeriesRing& R, const ExtProblem& problem, const Cochain& C, const Cochain& W);

// True when u^r (block)^{-1} is integral, i.e. u^r divides B_s C_s B'_s
// with B = u^r A^{-1}, B' = u^r A'^{-1}.
bool height_ok(const SeriesRing& R, const ExtProblem& problem, const Cochain& C);

int default_precision(const ExtProblem& problem, int p);
int default_degree_bound(const ExtProblem& problem, int p);

// W with entries of degree < bound and coboundary(W) = C_target mod u^N.
// Throws PrecisionError when the answer changes between bound and
// min(2 bound, N).
std::optional<EquivWitness> semilinear_solve(const SeriesRing& R, const ExtProblem& problem, const Cochain& C_target,
                                             int bound);

struct ExtSlot {
  int s;
  int i;
  int j;
  int degree;
  friend bool operator==(const ExtSlot&, const ExtSlot&) = default;
};

// raw: every coefficient below N; ext_shape: degree < t'_{j,s};
// phi_shape: u^{t_{i,s}} times a constant where t'_{j,s} > t_{i,s}.
std::vector<ExtSlot> ext_slots(const ExtProblem& problem, ShapeTag tag, int N);

struct ExtDim {
  int dimension = 0;
  std::vector<ExtClass> basis;
  int slots = 0;
  int admissible = 0;  // dimension of the slot space after the height filter
  int precision = 0;
  int check_precision = 0;
  int check_dimension = 0;
};

// Dimension of the admissible tagged classes modulo coboundaries, at
// precision N (0 selects the default) and certified at N * step.
ExtDim ext_dim(const GaloisField& F, const ExtProblem& problem, ShapeTag tag, int N = 0, int step = 2);

int d_nek(const std::vector<int>& t1, const std::vector<std::vector<int>>& rest);

struct UpperBoundReport {
  int ext_dim = 0;
  int d_nek = 0;
  bool holds = false;
  int precision = 0;
  int check_precision = 0;
};

// For a rank-1 sub; HypothesisError if some factor n_j maps to n_i, i < j.
UpperBoundReport check_upper_bound(const GaloisField& F, const ExtProblem& problem, int N = 0, int step = 2);

// classes[i] extends chain[i+1] by the module assembled from chain[0..i];
// each C_s is (i+1) x 1.
TriangularKisin successive_ext_assemble(const SeriesRing& R, const std::vector<Rank1Kisin>& chain,
                                        const std::vector<ExtClass>& classes);
std::vector<ExtClass> forgetful_decompose(const TriangularKisin& M);

}  // namespace kisin
