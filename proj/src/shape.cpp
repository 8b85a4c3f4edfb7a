#include "kisin/shape.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "kisin/errors.hpp"
#include "kisin/linalg.hpp"

namespace kisin {

TriangularKisin TriangularKisin::diagonal(const SeriesRing& R, const std::vector<std::vector<int>>& t,
                                          const std::vector<Fq>& a) {
  TriangularKisin M;
  M.d = static_cast<int>(t.size());
  if (M.d == 0 || a.size() != t.size()) throw InvalidInput("weights and units must have matching nonzero length");
  M.f = static_cast<int>(t.front().size());
  if (M.f == 0) throw InvalidInput("weight rows must be nonempty");
  M.t = t;
  M.a = a;
  for (int s = 0; s < M.f; ++s) {
    SeriesMatrix X = R.zero_matrix(M.d, M.d);
    for (int i = 0; i < M.d; ++i) {
      if (static_cast<int>(t[static_cast<std::size_t>(i)].size()) != M.f) throw InvalidInput("ragged weight matrix");
      const int w = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
      if (w < 0 || w >= R.precision()) throw InvalidInput("weight outside [0, N)");
      if (a[static_cast<std::size_t>(i)].code == 0) throw InvalidInput("units must be nonzero");
      X(i, i) = R.monomial(M.unit(i, s), w);
    }
    M.A.push_back(std::move(X));
  }
  return M;
}

TriangularKisin TriangularKisin::from_chain(const SeriesRing& R, const std::vector<Rank1Kisin>& chain) {
  std::vector<std::vector<int>> t;
  std::vector<Fq> a;
  for (const auto& n : chain) {
    t.push_back(n.t);
    a.push_back(n.a);
  }
  return diagonal(R, t, a);
}

Fq TriangularKisin::unit(int i, int s) const { return s == 0 ? a[static_cast<std::size_t>(i)] : Fq{1}; }

Rank1Kisin TriangularKisin::factor(int i) const {
  return Rank1Kisin{t[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(i)]};
}

bool TriangularKisin::distinct_weights() const {
  for (int s = 0; s < f; ++s)
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (t[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] ==
            t[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)])
          return false;
  return true;
}

void TriangularKisin::validate(const SeriesRing& R) const {
  if (static_cast<int>(A.size()) != f || static_cast<int>(t.size()) != d || static_cast<int>(a.size()) != d)
    throw InvalidInput("inconsistent triangular module dimensions");
  for (int s = 0; s < f; ++s) {
    const auto& X = A[static_cast<std::size_t>(s)];
    if (X.rows() != d || X.cols() != d) throw InvalidInput("Frobenius matrix has the wrong size");
    for (int i = 0; i < d; ++i) {
      if (R.embed(X(i, i)) != R.monomial(unit(i, s), t[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)]))
        throw InvalidInput("diagonal entry does not match weights and units");
      for (int j = 0; j < i; ++j)
        if (!X(i, j).is_zero()) throw InvalidInput("Frobenius matrix is not upper triangular");
    }
  }
}

TriangularKisin embed(const SeriesRing& R, const TriangularKisin& M) {
  TriangularKisin out = M;
  for (auto& X : out.A) X = R.embed(X);
  return out;
}

ShapeClass classify_shape(const TriangularKisin& M, int p) {
  ShapeClass out;
  for (int s = 0; s < M.f; ++s)
    for (int i = 0; i < M.d; ++i)
      for (int j = i + 1; j < M.d; ++j) {
        const TruncSeries& x = M.x(s, i, j);
        const int ti = M.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
        const int tj = M.t[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)];
        EntryShape e{s, i, j, x.degree() < tj, true};
        if (tj > ti) {
          ++out.free_slots;
          for (int k = 0; k < x.precision(); ++k)
            if (k != ti && x[k].code != 0) e.p_shape = false;
        } else {
          e.p_shape = x.is_zero();
        }
        out.deg_ok = out.deg_ok && e.deg_ok;
        out.p_shape = out.p_shape && e.p_shape;
        out.entries.push_back(e);
      }
  for (int i = 0; i < M.d; ++i)
    for (int j = i + 1; j < M.d; ++j) {
      if (!hom_exists(M.factor(j), M.factor(i), p)) continue;
      const auto aj = alpha_invariant(M.factor(j), p), ai = alpha_invariant(M.factor(i), p);
      for (int s0 = 0; s0 < M.f; ++s0) {
        const Rational deg = Rational(M.t[static_cast<std::size_t>(j)][static_cast<std::size_t>(s0)]) +
                             aj[static_cast<std::size_t>(s0)] - ai[static_cast<std::size_t>(s0)];
        out.extra_term_slots.push_back({i, j, s0, static_cast<int>(deg.numerator())});
      }
    }
  return out;
}

TriangularKisin allowable_procedure(const SeriesRing& R, const TriangularKisin& M, const AllowableMove& move) {
  if (move.i < 0 || move.j >= M.d || move.i >= move.j) throw InvalidMove("allowable move needs i < j");
  if (static_cast<int>(move.c.size()) != M.f) throw InvalidMove("one scalar per component is required");
  TriangularKisin out = M;
  for (int s = 0; s < M.f; ++s) {
    const Fq c = move.c[static_cast<std::size_t>(s)];
    if (c.code == 0) continue;
    if (M.t[static_cast<std::size_t>(move.i)][static_cast<std::size_t>(s)] >=
        M.t[static_cast<std::size_t>(move.j)][static_cast<std::size_t>(s)])
      throw InvalidMove("allowable move needs t_i < t_j in every affected component");
    auto& X = out.A[static_cast<std::size_t>(s)];
    for (int k = 0; k < M.d; ++k) X(k, move.j) = R.sub(X(k, move.j), R.scale(c, X(k, move.i)));
  }
  return out;
}

TriangularKisin replay(const SeriesRing& R, TriangularKisin M, const std::vector<AllowableMove>& moves) {
  for (const auto& mv : moves) M = allowable_procedure(R, M, mv);
  return M;
}

std::vector<AllowableMove> inverse_moves(const GaloisField& F, const std::vector<AllowableMove>& moves) {
  std::vector<AllowableMove> out(moves.rbegin(), moves.rend());
  for (auto& mv : out)
    for (auto& c : mv.c) c = F.neg(c);
  return out;
}

Normalization normalize_to_diagonal(const SeriesRing& R, const TriangularKisin& M) {
  if (!classify_shape(M, R.p()).p_shape) throw ShapeError("module is not in phi-shape");
  const GaloisField& F = R.field();
  Normalization out{M, {}};
  for (int j = M.d - 1; j >= 1; --j)
    for (int i = j - 1; i >= 0; --i) {
      AllowableMove mv{i, j, std::vector<Fq>(static_cast<std::size_t>(M.f), F.zero())};
      bool any = false;
      for (int s = 0; s < M.f; ++s) {
        const int ti = M.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
        const int tj = M.t[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)];
        if (tj <= ti) continue;
        const Fq y = out.diagonal.x(s, i, j)[ti];
        if (y.code == 0) continue;
        mv.c[static_cast<std::size_t>(s)] = F.div(y, M.unit(i, s));
        any = true;
      }
      if (!any) continue;
      out.diagonal = allowable_procedure(R, out.diagonal, mv);
      out.moves.push_back(std::move(mv));
    }
  return out;
}

std::vector<bool> column_divisibility(const SeriesRing& R, const SeriesMatrix& X, const FqMatrix& A,
                                      const std::vector<int>& t) {
  const int d = X.rows();
  if (X.cols() != d || A.rows() != d || A.cols() != d || static_cast<int>(t.size()) != d)
    throw InvalidInput("matrix sizes do not match");
  if (!is_invertible(R.field(), A)) throw InvalidInput("A is singular");
  const SeriesMatrix XA = R.mul(X, R.from_constant(A));
  std::vector<bool> out(static_cast<std::size_t>(d), true);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const Valuation v = R.val(XA(k, i));
      if (!v.infinite() && *v.value < t[static_cast<std::size_t>(i)]) out[static_cast<std::size_t>(i)] = false;
    }
  return out;
}

namespace {

constexpr std::uint64_t kMaxVectors = 1u << 16;
constexpr std::uint64_t kMaxMatrices = 1u << 21;

struct DivisibilitySearch {
  const GaloisField& F;
  int d;
  int p;
  std::vector<int> t;
  std::uint32_t q;
  std::uint32_t nv;
  std::vector<std::vector<Fq>> vec;          // vec[v][k]
  std::vector<std::vector<std::uint32_t>> gl;  // column vector indices
  std::vector<std::pair<int, int>> slots;    // (i, j) with i < j
  std::vector<Fq> coef;                      // flattened x_{ij} coefficients
  std::vector<int> offset;                   // per slot
  std::vector<int> minval;

  DivisibilitySearch(const GaloisField& field, int rank, std::vector<int> weights)
      : F(field), d(rank), p(field.characteristic()), t(std::move(weights)), q(field.order()) {
    std::uint64_t n = 1;
    for (int k = 0; k < d; ++k) n *= q;
    if (n > kMaxVectors) throw BudgetError("too many vectors in k_E^d");
    nv = static_cast<std::uint32_t>(n);
    for (std::uint32_t v = 0; v < nv; ++v) {
      std::vector<Fq> digits(static_cast<std::size_t>(d));
      std::uint32_t x = v;
      for (int k = 0; k < d; ++k) {
        digits[static_cast<std::size_t>(k)] = Fq{x % q};
        x /= q;
      }
      vec.push_back(std::move(digits));
    }
    std::uint64_t total = 1;
    for (int k = 0; k < d; ++k) {
      total *= nv;
      if (total > kMaxMatrices) throw BudgetError("GL_d(k_E) is too large to enumerate");
    }
    std::vector<std::uint32_t> cols(static_cast<std::size_t>(d), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t x = idx;
      FqMatrix A(d, d);
      for (int c = 0; c < d; ++c) {
        cols[static_cast<std::size_t>(c)] = static_cast<std::uint32_t>(x % nv);
        x /= nv;
        for (int k = 0; k < d; ++k) A(k, c) = vec[cols[static_cast<std::size_t>(c)]][static_cast<std::size_t>(k)];
      }
      if (determinant(F, A).code != 0) gl.push_back(cols);
    }
    int off = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        slots.emplace_back(i, j);
        offset.push_back(off);
        off += t[static_cast<std::size_t>(j)];
      }
    coef.assign(static_cast<std::size_t>(off), Fq{0});
    minval.assign(nv, 0);
  }

  Fq x_coef(int slot, int deg) const {
    const int j = slots[static_cast<std::size_t>(slot)].second;
    if (deg >= t[static_cast<std::size_t>(j)]) return Fq{0};
    return coef[static_cast<std::size_t>(offset[static_cast<std::size_t>(slot)] + deg)];
  }

  bool satisfies_p() const {
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const auto [i, j] = slots[k];
      const int ti = t[static_cast<std::size_t>(i)], tj = t[static_cast<std::size_t>(j)];
      for (int deg = 0; deg < tj; ++deg) {
        const bool allowed = tj > ti && deg == ti;
        if (!allowed && x_coef(static_cast<int>(k), deg).code != 0) return false;
      }
    }
    return true;
  }

  void compute_minval() {
    std::vector<Fq> acc(static_cast<std::size_t>(p) + 1);
    for (std::uint32_t v = 0; v < nv; ++v) {
      int best = p + 1;
      for (int k = 0; k < d; ++k) {
        std::fill(acc.begin(), acc.end(), Fq{0});
        acc[static_cast<std::size_t>(t[static_cast<std::size_t>(k)])] = vec[v][static_cast<std::size_t>(k)];
        for (std::size_t sl = 0; sl < slots.size(); ++sl) {
          if (slots[sl].first != k) continue;
          const Fq vj = vec[v][static_cast<std::size_t>(slots[sl].second)];
          if (vj.code == 0) continue;
          for (int deg = 0; deg < t[static_cast<std::size_t>(slots[sl].second)]; ++deg)
            acc[static_cast<std::size_t>(deg)] =
                F.add(acc[static_cast<std::size_t>(deg)], F.mul(x_coef(static_cast<int>(sl), deg), vj));
        }
        for (int deg = 0; deg < best; ++deg)
          if (acc[static_cast<std::size_t>(deg)].code != 0) {
            best = deg;
            break;
          }
      }
      minval[v] = best;
    }
  }

  SeriesMatrix x_matrix() const {
    SeriesRing R(F, p + 1);
    SeriesMatrix X = R.zero_matrix(d, d);
    for (int i = 0; i < d; ++i) X(i, i) = R.monomial(F.one(), t[static_cast<std::size_t>(i)]);
    for (std::size_t k = 0; k < slots.size(); ++k)
      for (int deg = 0; deg < t[static_cast<std::size_t>(slots[k].second)]; ++deg)
        X(slots[k].first, slots[k].second)[deg] = x_coef(static_cast<int>(k), deg);
    return X;
  }

  FqMatrix a_matrix(const std::vector<std::uint32_t>& cols) const {
    FqMatrix A(d, d);
    for (int c = 0; c < d; ++c)
      for (int k = 0; k < d; ++k) A(k, c) = vec[cols[static_cast<std::size_t>(c)]][static_cast<std::size_t>(k)];
    return A;
  }

  void check_current(ShapeVerifyReport& rep) {
    ++rep.x_checked;
    const bool p_ok = satisfies_p();
    if (!p_ok) ++rep.x_without_p;
    compute_minval();
    for (const auto& cols : gl) {
      ++rep.pairs_checked;
      bool hyp = true;
      for (int c = 0; c < d && hyp; ++c)
        hyp = minval[cols[static_cast<std::size_t>(c)]] >= t[static_cast<std::size_t>(c)];
      if (!hyp) continue;
      ++rep.hypothesis_pairs;
      if (!p_ok && rep.counterexamples.size() < 16) rep.counterexamples.push_back({x_matrix(), a_matrix(cols)});
    }
  }
};

}  // namespace

ShapeVerifyReport shapelemma_verify(const GaloisField& F, const ShapeVerifyConfig& config) {
  const int p = F.characteristic();
  if (config.d < 1 || static_cast<int>(config.t.size()) != config.d) throw InvalidInput("need one weight per row");
  for (int x : config.t)
    if (x < 0 || x > p) throw InvalidInput("weights must lie in [0, p]");
  auto sorted = config.t;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InvalidInput("weights must be distinct");

  ShapeVerifyReport rep;
  rep.config = config;
  const int tmax = sorted.back();
  rep.last_weight_max = config.t.back() == tmax;
  rep.first_weight_max = config.t.front() == tmax;

  DivisibilitySearch search(F, config.d, config.t);
  rep.gl_order = search.gl.size();
  const std::size_t K = search.coef.size();

  if (config.exhaustive) {
    while (true) {
      if (rep.x_checked >= config.budget) {
        throw BudgetError("exhaustive search exceeded its budget after " + std::to_string(rep.x_checked) +
                          " matrices X (" + std::to_string(rep.counterexamples.size()) + " counterexamples so far)");
      }
      search.check_current(rep);
      std::size_t k = 0;
      while (k < K && search.coef[k].code + 1 == F.order()) {
        search.coef[k] = Fq{0};
        ++k;
      }
      if (k == K) break;
      search.coef[k] = Fq{search.coef[k].code + 1};
    }
  } else {
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, F.order() - 1);
    for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
      for (auto& c : search.coef) c = Fq{pick(rng)};
      search.check_current(rep);
    }
  }
  return rep;
}

DiagRecovery diag_recovery_check(const SeriesRing& R, const SeriesMatrix& B, const std::vector<int>& r,
                                 const SeriesMatrix& A) {
  const GaloisField& F = R.field();
  const int d = static_cast<int>(r.size());
  if (B.rows() != d || B.cols() != d || A.rows() != d || A.cols() != d) throw InvalidInput("matrix sizes do not match");
  for (int i = 0; i < d; ++i) {
    if (r[static_cast<std::size_t>(i)] < 0 || r[static_cast<std::size_t>(i)] > R.p() ||
        (i > 0 && r[static_cast<std::size_t>(i)] < r[static_cast<std::size_t>(i) - 1]))
      throw InvalidInput("exponents must be nondecreasing in [0, p]");
  }
  FqMatrix B0(d, d), A0(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      B0(i, j) = B(i, j)[0];
      A0(i, j) = A(i, j)[0];
      for (int k = 0; k < A(i, j).precision(); ++k)
        if (k % R.p() != 0 && A(i, j)[k].code != 0) throw InvalidInput("A must have entries in k_E[[u^p]]");
    }
  if (!is_invertible(F, B0)) throw InvalidInput("B is not invertible over k_E[[u]]");
  if (!is_invertible(F, A0)) throw InvalidInput("A is not invertible");

  SeriesMatrix D = R.zero_matrix(d, d);
  for (int i = 0; i < d; ++i) D(i, i) = R.monomial(F.one(), r[static_cast<std::size_t>(i)]);
  const SeriesMatrix M = R.mul(R.mul(R.embed(B), D), R.embed(A));

  DiagRecovery out;
  out.triangular = true;
  for (int i = 0; i < d && out.triangular; ++i) {
    for (int j = 0; j < i; ++j)
      if (!M(i, j).is_zero()) out.triangular = false;
    const Valuation v = R.val(M(i, i));
    if (v.infinite()) out.triangular = false;
    else out.t.push_back(*v.value);
  }
  if (!out.triangular) {
    out.t.clear();
    return out;
  }
  auto sorted = out.t;
  std::sort(sorted.begin(), sorted.end());
  out.holds = sorted == r;
  return out;
}

SeriesMatrix left_triangularizer(const SeriesRing& R, const SeriesMatrix& P) {
  const int d = P.rows();
  if (P.cols() != d) throw InvalidInput("matrix must be square");
  SeriesMatrix M = R.embed(P);
  SeriesMatrix H = R.identity(d);
  for (int c = 0; c < d; ++c) {
    int best = -1, best_val = R.precision();
    for (int r = c; r < d; ++r) {
      const Valuation v = R.val(M(r, c));
      if (!v.infinite() && *v.value < best_val) {
        best = r;
        best_val = *v.value;
      }
    }
    if (best < 0) continue;
    if (best != c)
      for (int k = 0; k < d; ++k) {
        std::swap(M(best, k), M(c, k));
        std::swap(H(best, k), H(c, k));
      }
    const TruncSeries unit_inv = R.inv(R.shift(M(c, c), -best_val));
    for (int r = c + 1; r < d; ++r) {
      if (M(r, c).is_zero()) continue;
      const TruncSeries factor = R.mul(R.shift(M(r, c), -best_val), unit_inv);
      for (int k = 0; k < d; ++k) {
        M(r, k) = R.sub(M(r, k), R.mul(factor, M(c, k)));
        H(r, k) = R.sub(H(r, k), R.mul(factor, H(c, k)));
      }
    }
  }
  return H;
}

}  // namespace kisin
