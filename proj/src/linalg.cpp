#include "kisin/linalg.hpp"

#include <utility>

#include "kisin/errors.hpp"

namespace kisin {

EchelonForm row_reduce(const GaloisField& F, FqMatrix m) {
  const int R = m.rows(), C = m.cols();
  std::vector<int> pivots;
  std::vector<int> nz;
  int row = 0;
  for (int col = 0; col < C && row < R; ++col) {
    int piv = -1;
    for (int r = row; r < R; ++r)
      if (m(r, col).code != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int k = col; k < C; ++k) std::swap(m(piv, k), m(row, k));
    const Fq scale = F.inv(m(row, col));
    nz.clear();
    for (int k = col; k < C; ++k) {
      if (m(row, k).code == 0) continue;
      m(row, k) = F.mul(m(row, k), scale);
      nz.push_back(k);
    }
    for (int r = 0; r < R; ++r) {
      if (r == row) continue;
      const Fq factor = m(r, col);
      if (factor.code == 0) continue;
      for (int k : nz) m(r, k) = F.sub(m(r, k), F.mul(factor, m(row, k)));
    }
    pivots.push_back(col);
    ++row;
  }
  return EchelonForm{std::move(m), std::move(pivots)};
}

int rank(const GaloisField& F, const FqMatrix& m) {
  return static_cast<int>(row_reduce(F, m).pivots.size());
}

Fq determinant(const GaloisField& F, const FqMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  FqMatrix a = m;
  const int n = a.rows();
  Fq det = F.one();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a(r, col).code != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return F.zero();
    if (piv != col) {
      for (int k = 0; k < n; ++k) std::swap(a(piv, k), a(col, k));
      det = F.neg(det);
    }
    det = F.mul(det, a(col, col));
    const Fq inv = F.inv(a(col, col));
    for (int r = col + 1; r < n; ++r) {
      const Fq factor = F.mul(a(r, col), inv);
      if (factor.code == 0) continue;
      for (int k = col; k < n; ++k) a(r, k) = F.sub(a(r, k), F.mul(factor, a(col, k)));
    }
  }
  return det;
}

bool is_invertible(const GaloisField& F, const FqMatrix& m) {
  return m.rows() == m.cols() && rank(F, m) == m.rows();
}

std::vector<std::vector<Fq>> nullspace(const GaloisField& F, const FqMatrix& m) {
  const EchelonForm e = row_reduce(F, m);
  const int C = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(C), false);
  for (int c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Fq>> basis;
  for (int free = 0; free < C; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Fq> v(static_cast<std::size_t>(C), F.zero());
    v[static_cast<std::size_t>(free)] = F.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[static_cast<std::size_t>(e.pivots[r])] = F.neg(e.rref(static_cast<int>(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Fq>> solve(const GaloisField& F, const FqMatrix& m, const std::vector<Fq>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw InvalidInput("right-hand side size mismatch");
  const int C = m.cols();
  FqMatrix aug(m.rows(), C + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < C; ++j) aug(i, j) = m(i, j);
    aug(i, C) = b[static_cast<std::size_t>(i)];
  }
  const EchelonForm e = row_reduce(F, std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == C) return std::nullopt;
  std::vector<Fq> x(static_cast<std::size_t>(C), F.zero());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    x[static_cast<std::size_t>(e.pivots[r])] = e.rref(static_cast<int>(r), C);
  return x;
}

FqMatrix identity_matrix(const GaloisField& F, int d) {
  FqMatrix m(d, d, F.zero());
  for (int i = 0; i < d; ++i) m(i, i) = F.one();
  return m;
}

FqMatrix mul(const GaloisField& F, const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix size mismatch");
  FqMatrix out(a.rows(), b.cols(), F.zero());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k).code == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) = F.add(out(i, j), F.mul(a(i, k), b(k, j)));
    }
  return out;
}

}  // namespace kisin
