#include "kisin/ext.hpp"

#include <algorithm>
#include <string>

#include "kisin/errors.hpp"
#include "kisin/linalg.hpp"

namespace kisin {

namespace {

std::size_t sz(int x) { return static_cast<std::size_t>(x); }

int max_weight(const TriangularKisin& M) {
  int m = 0;
  for (const auto& row : M.t)
    for (int w : row) m = std::max(m, w);
  return m;
}

void check_cochain(const ExtProblem& P, const Cochain& C, const char* what) {
  if (static_cast<int>(C.size()) != P.f()) throw InvalidInput(std::string(what) + ": one matrix per component expected");
  for (const auto& X : C)
    if (X.rows() != P.k() || X.cols() != P.kq()) throw InvalidInput(std::string(what) + ": matrix has the wrong size");
}

// u^r A^{-1} modulo u^r for upper-triangular A; empty if it is not integral.
std::optional<SeriesMatrix> scaled_inverse(const GaloisField& F, const TriangularKisin& M, int s, int r) {
  const int d = M.d;
  const SeriesRing W(F, r + d * (max_weight(M) + 1) + 1);
  const SeriesMatrix A = W.embed(M.A[sz(s)]);
  SeriesMatrix B = W.zero_matrix(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = j; i >= 0; --i) {
      TruncSeries rhs = i == j ? W.monomial(F.one(), r) : W.zero();
      for (int l = i + 1; l <= j; ++l) rhs = W.sub(rhs, W.mul(A(i, l), B(l, j)));
      const int t = M.t[sz(i)][sz(s)];
      for (int e = 0; e < t; ++e)
        if (rhs[e].code != 0) return std::nullopt;
      B(i, j) = W.scale(F.inv(M.unit(i, s)), W.shift(rhs, -t));
    }
  const SeriesRing Rr(F, r);
  return Rr.embed(B);
}

struct HeightData {
  std::vector<SeriesMatrix> B, Bq;
};

HeightData height_data(const GaloisField& F, const ExtProblem& P) {
  HeightData h;
  for (int s = 0; s < P.f(); ++s) {
    auto b = scaled_inverse(F, P.sub, s, P.r);
    auto bq = scaled_inverse(F, P.quot, s, P.r);
    if (!b || !bq) throw InvalidInput("sub or quotient does not have height at most r");
    h.B.push_back(std::move(*b));
    h.Bq.push_back(std::move(*bq));
  }
  return h;
}

// Coordinates: C_s(i, j) coefficient e at ((s k + i) k' + j) N + e.
struct Layout {
  int f, k, kq, N;
  int entries() const { return f * k * kq; }
  int size() const { return entries() * N; }
  int index(int s, int i, int j, int e) const { return ((s * k + i) * kq + j) * N + e; }
};

// Column list of the coboundary map on W coefficients of degree < bound.
std::vector<std::vector<std::pair<int, Fq>>> coboundary_columns(const GaloisField& F, const ExtProblem& P,
                                                                const Layout& L, int bound) {
  const int p = F.characteristic();
  std::vector<std::vector<std::pair<int, Fq>>> cols;
  for (int s = 0; s < L.f; ++s) {
    const SeriesMatrix& Aq = P.quot.A[sz(s)];
    const int s1 = (s + 1) % L.f;
    const SeriesMatrix& A1 = P.sub.A[sz(s1)];
    for (int a = 0; a < L.k; ++a)
      for (int b = 0; b < L.kq; ++b)
        for (int e = 0; e < bound; ++e) {
          std::vector<std::pair<int, Fq>> col;
          // W_s A'_s
          for (int j = 0; j < L.kq; ++j) {
            const TruncSeries& x = Aq(b, j);
            for (int e2 = 0; e2 < x.precision() && e + e2 < L.N; ++e2)
              if (x[e2].code != 0) col.emplace_back(L.index(s, a, j, e + e2), x[e2]);
          }
          // -A_{s+1} phi(W_s)
          if (static_cast<long long>(p) * e < L.N)
            for (int i = 0; i < L.k; ++i) {
              const TruncSeries& x = A1(i, a);
              for (int e2 = 0; e2 < x.precision() && p * e + e2 < L.N; ++e2)
                if (x[e2].code != 0) col.emplace_back(L.index(s1, i, b, p * e + e2), F.neg(x[e2]));
            }
          cols.push_back(std::move(col));
        }
  }
  return cols;
}

// Coefficient vector (length L.size()) of a cochain.
std::vector<Fq> flatten(const GaloisField& F, const Layout& L, const Cochain& C) {
  std::vector<Fq> v(sz(L.size()), F.zero());
  for (int s = 0; s < L.f; ++s)
    for (int i = 0; i < L.k; ++i)
      for (int j = 0; j < L.kq; ++j) {
        const TruncSeries& x = C[sz(s)](i, j);
        for (int e = 0; e < L.N && e < x.precision(); ++e) v[sz(L.index(s, i, j, e))] = x[e];
      }
  return v;
}

Cochain unflatten(const SeriesRing& R, const Layout& L, const std::vector<Fq>& v, int bound) {
  Cochain C;
  for (int s = 0; s < L.f; ++s) {
    SeriesMatrix X = R.zero_matrix(L.k, L.kq);
    for (int i = 0; i < L.k; ++i)
      for (int j = 0; j < L.kq; ++j)
        for (int e = 0; e < bound; ++e) X(i, j)[e] = v[sz(((s * L.k + i) * L.kq + j) * bound + e)];
    C.push_back(std::move(X));
  }
  return C;
}

std::optional<std::vector<Fq>> solve_at(const GaloisField& F, const ExtProblem& P, const Layout& L,
                                        const std::vector<Fq>& target, int bound) {
  const auto cols = coboundary_columns(F, P, L, bound);
  FqMatrix M(L.size(), static_cast<int>(cols.size()), F.zero());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [row, v] : cols[c]) M(row, static_cast<int>(c)) = F.add(M(row, static_cast<int>(c)), v);
  return solve(F, M, target);
}

struct DimAt {
  int dimension = 0;
  int slots = 0;
  int admissible = 0;
  std::vector<ExtClass> basis;
};

DimAt dimension_at(const GaloisField& F, const ExtProblem& problem, ShapeTag tag, int N) {
  const SeriesRing R(F, N);
  ExtProblem P = problem;
  P.sub = embed(R, problem.sub);
  P.quot = embed(R, problem.quot);
  const Layout L{P.f(), P.k(), P.kq(), N};
  const auto slots = ext_slots(P, tag, N);

  // Height filter on the slot span.
  std::vector<std::vector<Fq>> admissible;
  if (P.r > 0 && !slots.empty()) {
    const HeightData h = height_data(F, P);
    const SeriesRing Rr(F, P.r);
    const int rows = P.f() * P.k() * P.kq() * P.r;
    FqMatrix H(rows, static_cast<int>(slots.size()), F.zero());
    for (std::size_t c = 0; c < slots.size(); ++c) {
      const ExtSlot& sl = slots[c];
      if (sl.degree >= P.r) continue;
      const SeriesMatrix& B = h.B[sz(sl.s)];
      const SeriesMatrix& Bq = h.Bq[sz(sl.s)];
      for (int a = 0; a < P.k(); ++a)
        for (int b = 0; b < P.kq(); ++b) {
          const TruncSeries prod = Rr.shift(Rr.mul(B(a, sl.i), Bq(sl.j, b)), sl.degree);
          for (int e = 0; e < P.r; ++e)
            H(((sl.s * P.k() + a) * P.kq() + b) * P.r + e, static_cast<int>(c)) = prod[e];
        }
    }
    admissible = nullspace(F, H);
  } else {
    for (std::size_t c = 0; c < slots.size(); ++c) {
      std::vector<Fq> v(slots.size(), F.zero());
      v[c] = F.one();
      admissible.push_back(std::move(v));
    }
  }

  const auto cols = coboundary_columns(F, P, L, N);
  const int nL = static_cast<int>(cols.size());
  const int nS = static_cast<int>(admissible.size());
  FqMatrix M(L.size(), nL + nS, F.zero());
  for (int c = 0; c < nL; ++c)
    for (const auto& [row, v] : cols[sz(c)]) M(row, c) = F.add(M(row, c), v);
  for (int c = 0; c < nS; ++c)
    for (std::size_t q = 0; q < slots.size(); ++q) {
      const Fq v = admissible[sz(c)][q];
      if (v.code == 0) continue;
      const ExtSlot& sl = slots[q];
      M(L.index(sl.s, sl.i, sl.j, sl.degree), nL + c) = v;
    }
  const EchelonForm ech = row_reduce(F, std::move(M));

  DimAt out;
  out.slots = static_cast<int>(slots.size());
  out.admissible = nS;
  for (int col : ech.pivots) {
    if (col < nL) continue;
    ++out.dimension;
    ExtClass cls{zero_cochain(R, P), tag};
    const auto& v = admissible[sz(col - nL)];
    for (std::size_t q = 0; q < slots.size(); ++q) {
      const ExtSlot& sl = slots[q];
      cls.C[sz(sl.s)](sl.i, sl.j)[sl.degree] = v[q];
    }
    out.basis.push_back(std::move(cls));
  }
  return out;
}

}  // namespace

std::string to_string(ShapeTag tag) {
  switch (tag) {
    case ShapeTag::Raw:
      return "raw";
    case ShapeTag::ExtShape:
      return "ext_shape";
    case ShapeTag::PhiShape:
      return "phi_shape";
  }
  return "raw";
}

ShapeTag parse_shape_tag(const std::string& s) {
  if (s == "raw") return ShapeTag::Raw;
  if (s == "ext_shape") return ShapeTag::ExtShape;
  if (s == "phi_shape") return ShapeTag::PhiShape;
  throw InvalidInput("unknown shape tag: " + s);
}

void ExtProblem::validate() const {
  if (sub.f != quot.f) throw InvalidInput("sub and quotient have different numbers of components");
  if (sub.d < 1 || quot.d < 1) throw InvalidInput("sub and quotient must be nonzero");
  if (r < 0) throw InvalidInput("height must be nonnegative");
  if (static_cast<int>(sub.A.size()) != sub.f || static_cast<int>(quot.A.size()) != quot.f)
    throw InvalidInput("missing Frobenius matrices");
}

ExtProblem make_problem(const TriangularKisin& sub, const TriangularKisin& quot, int p, std::optional<int> r) {
  ExtProblem P{sub, quot, r.value_or(p)};
  P.validate();
  return P;
}

Cochain zero_cochain(const SeriesRing& R, const ExtProblem& problem) {
  return Cochain(sz(problem.f()), R.zero_matrix(problem.k(), problem.kq()));
}

Cochain coboundary(const SeriesRing& R, const ExtProblem& problem, const Cochain& W) {
  check_cochain(problem, W, "coboundary");
  const int f = problem.f();
  Cochain out;
  for (int s = 0; s < f; ++s) {
    const SeriesMatrix& Wprev = W[sz((s + f - 1) % f)];
    out.push_back(R.sub(R.mul(R.embed(W[sz(s)]), R.embed(problem.quot.A[sz(s)])),
                        R.mul(R.embed(problem.sub.A[sz(s)]), R.phi(R.embed(Wprev)))));
  }
  return out;
}

Cochain block_basis_change(const SeriesRing& R, const ExtProblem& problem, const Cochain& C, const Cochain& W) {
  check_cochain(problem, C, "block_basis_change");
  const Cochain dW = coboundary(R, problem, W);
  Cochain out;
  for (int s = 0; s < problem.f(); ++s) out.push_back(R.sub(R.embed(C[sz(s)]), dW[sz(s)]));
  return out;
}

SeriesMatrix block_matrix(const SeriesRing& R, const ExtProblem& problem, const Cochain& C, int s) {
  const int k = problem.k(), kq = problem.kq();
  SeriesMatrix M = R.zero_matrix(k + kq, k + kq);
  const SeriesMatrix& A = problem.sub.A[sz(s)];
  const SeriesMatrix& Aq = problem.quot.A[sz(s)];
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) M(i, j) = R.embed(A(i, j));
  for (int i = 0; i < kq; ++i)
    for (int j = 0; j < kq; ++j) M(k + i, k + j) = R.embed(Aq(i, j));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < kq; ++j) M(i, k + j) = R.embed(C[sz(s)](i, j));
  return M;
}

Cochain block_conjugate(const SeriesRing& R, const ExtProblem& problem, const Cochain& C, const Cochain& W) {
  check_cochain(problem, C, "block_conjugate");
  check_cochain(problem, W, "block_conjugate");
  const int k = problem.k(), kq = problem.kq(), f = problem.f();
  Cochain out;
  for (int s = 0; s < f; ++s) {
    SeriesMatrix left = R.identity(k + kq), right = R.identity(k + kq);
    const SeriesMatrix phiW = R.phi(R.embed(W[sz((s + f - 1) % f)]));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < kq; ++j) {
        left(i, k + j) = R.neg(R.embed(W[sz(s)](i, j)));
        right(i, k + j) = phiW(i, j);
      }
    const SeriesMatrix prod = R.mul(R.mul(left, block_matrix(R, problem, C, s)), right);
    SeriesMatrix X = R.zero_matrix(k, kq);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < kq; ++j) X(i, j) = prod(i, k + j);
    out.push_back(std::move(X));
  }
  return out;
}

bool height_ok(const SeriesRing& R, const ExtProblem& problem, const Cochain& C) {
  check_cochain(problem, C, "height_ok");
  if (problem.r == 0) return true;
  const GaloisField& F = R.field();
  const HeightData h = height_data(F, problem);
  const SeriesRing Rr(F, problem.r);
  for (int s = 0; s < problem.f(); ++s)
    if (!Rr.is_zero(Rr.mul(Rr.mul(h.B[sz(s)], Rr.embed(C[sz(s)])), h.Bq[sz(s)]))) return false;
  return true;
}

int default_precision(const ExtProblem& problem, int p) { return p * (problem.k() + problem.kq()) * (p + 1); }

int default_degree_bound(const ExtProblem& problem, int p) {
  int best = 0;
  for (const TriangularKisin* M : {&problem.sub, &problem.quot})
    for (const auto& row : M->t) {
      int total = 0;
      for (int w : row) total += w;
      best = std::max(best, total);
    }
  return p * best + p;
}

std::optional<EquivWitness> semilinear_solve(const SeriesRing& R, const ExtProblem& problem, const Cochain& C_target,
                                             int bound) {
  problem.validate();
  check_cochain(problem, C_target, "semilinear_solve");
  const int N = R.precision();
  if (bound < 1 || bound > N) throw InvalidInput("degree bound must lie in [1, N]");
  const GaloisField& F = R.field();
  ExtProblem P = problem;
  P.sub = embed(R, problem.sub);
  P.quot = embed(R, problem.quot);
  const Layout L{P.f(), P.k(), P.kq(), N};
  const auto target = flatten(F, L, C_target);
  const auto x = solve_at(F, P, L, target, bound);
  if (!x) {
    const int bound2 = std::min(2 * bound, N);
    if (bound2 > bound && solve_at(F, P, L, target, bound2))
      throw PrecisionError("solvability changes between degree bounds " + std::to_string(bound) + " and " +
                           std::to_string(bound2));
    return std::nullopt;
  }
  return EquivWitness{unflatten(R, L, *x, bound), N};
}

std::vector<ExtSlot> ext_slots(const ExtProblem& problem, ShapeTag tag, int N) {
  std::vector<ExtSlot> out;
  const int f = problem.f();
  for (int s = 0; s < f; ++s)
    for (int i = 0; i < problem.k(); ++i)
      for (int j = 0; j < problem.kq(); ++j) {
        const int ti = problem.sub.t[sz(i)][sz(s)];
        const int tj = problem.quot.t[sz(j)][sz(s)];
        switch (tag) {
          case ShapeTag::Raw:
            for (int e = 0; e < N; ++e) out.push_back({s, i, j, e});
            break;
          case ShapeTag::ExtShape:
            for (int e = 0; e < tj && e < N; ++e) out.push_back({s, i, j, e});
            break;
          case ShapeTag::PhiShape:
            if (tj > ti && ti < N) out.push_back({s, i, j, ti});
            break;
        }
      }
  return out;
}

ExtDim ext_dim(const GaloisField& F, const ExtProblem& problem, ShapeTag tag, int N, int step) {
  problem.validate();
  const int p = F.characteristic();
  if (N <= 0) N = default_precision(problem, p);
  if (step < 2) throw InvalidInput("precision step must be at least 2");
  const DimAt a = dimension_at(F, problem, tag, N);
  const DimAt b = dimension_at(F, problem, tag, N * step);
  if (a.dimension != b.dimension)
    throw PrecisionError("ext dimension " + std::to_string(a.dimension) + " at N=" + std::to_string(N) + " but " +
                         std::to_string(b.dimension) + " at N=" + std::to_string(N * step));
  return ExtDim{a.dimension, a.basis, a.slots, a.admissible, N, N * step, b.dimension};
}

int d_nek(const std::vector<int>& t1, const std::vector<std::vector<int>>& rest) {
  int n = 0;
  for (const auto& t : rest)
    for (std::size_t s = 0; s < t.size() && s < t1.size(); ++s)
      if (t[s] > t1[s]) ++n;
  return n;
}

UpperBoundReport check_upper_bound(const GaloisField& F, const ExtProblem& problem, int N, int step) {
  problem.validate();
  if (problem.k() != 1) throw InvalidInput("upper bound check needs a rank-1 sub");
  const int p = F.characteristic();
  std::vector<Rank1Kisin> chain{problem.sub.factor(0)};
  for (int j = 0; j < problem.kq(); ++j) chain.push_back(problem.quot.factor(j));
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j)
      if (hom_exists(chain[j], chain[i], p))
        throw HypothesisError("factor " + std::to_string(j + 1) + " maps to factor " + std::to_string(i + 1));
  const ExtDim e = ext_dim(F, problem, ShapeTag::PhiShape, N, step);
  const int bound = d_nek(problem.sub.t[0], problem.quot.t);
  return UpperBoundReport{e.dimension, bound, e.dimension <= bound, e.precision, e.check_precision};
}

TriangularKisin successive_ext_assemble(const SeriesRing& R, const std::vector<Rank1Kisin>& chain,
                                        const std::vector<ExtClass>& classes) {
  if (chain.empty()) throw InvalidInput("empty chain");
  if (classes.size() + 1 != chain.size()) throw InvalidInput("need one class per factor after the first");
  TriangularKisin M = TriangularKisin::from_chain(R, chain);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& C = classes[c].C;
    if (static_cast<int>(C.size()) != M.f) throw InvalidInput("class has the wrong number of components");
    for (int s = 0; s < M.f; ++s) {
      const SeriesMatrix& X = C[sz(s)];
      if (X.rows() != static_cast<int>(c) + 1 || X.cols() != 1) throw InvalidInput("class matrix has the wrong size");
      for (int i = 0; i <= static_cast<int>(c); ++i) M.x(s, i, static_cast<int>(c) + 1) = R.embed(X(i, 0));
    }
  }
  return M;
}

std::vector<ExtClass> forgetful_decompose(const TriangularKisin& M) {
  std::vector<ExtClass> out;
  for (int c = 1; c < M.d; ++c) {
    ExtClass cls;
    for (int s = 0; s < M.f; ++s) {
      SeriesMatrix X(c, 1);
      for (int i = 0; i < c; ++i) X(i, 0) = M.x(s, i, c);
      cls.C.push_back(std::move(X));
    }
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace kisin
