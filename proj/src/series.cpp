#include "kisin/series.hpp"

#include <algorithm>

#include "kisin/errors.hpp"

namespace kisin {

TruncSeries::TruncSeries(std::vector<Fq> coeffs, int N) : c_(std::move(coeffs)) {
  c_.resize(static_cast<std::size_t>(N));
}

bool TruncSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Fq x) { return x.code == 0; });
}

int TruncSeries::degree() const {
  for (int k = precision() - 1; k >= 0; --k)
    if (c_[static_cast<std::size_t>(k)].code != 0) return k;
  return -1;
}

SeriesRing::SeriesRing(const GaloisField& field, int N) : F_(&field), N_(N) {
  if (N < 1) throw InvalidInput("series precision must be positive");
}

TruncSeries SeriesRing::constant(Fq c) const { return monomial(c, 0); }

TruncSeries SeriesRing::monomial(Fq c, int k) const {
  TruncSeries s(N_);
  if (k < 0) throw InvalidInput("negative exponent");
  if (k < N_) s[k] = c;
  return s;
}

TruncSeries SeriesRing::from_coeffs(const std::vector<Fq>& coeffs) const {
  return TruncSeries(coeffs, N_);
}

TruncSeries SeriesRing::embed(const TruncSeries& s) const { return TruncSeries(s.coeffs(), N_); }

TruncSeries SeriesRing::add(const TruncSeries& a, const TruncSeries& b) const {
  TruncSeries out(N_);
  for (int k = 0; k < N_; ++k) out[k] = F_->add(a[k], b[k]);
  return out;
}

TruncSeries SeriesRing::sub(const TruncSeries& a, const TruncSeries& b) const {
  TruncSeries out(N_);
  for (int k = 0; k < N_; ++k) out[k] = F_->sub(a[k], b[k]);
  return out;
}

TruncSeries SeriesRing::neg(const TruncSeries& a) const {
  TruncSeries out(N_);
  for (int k = 0; k < N_; ++k) out[k] = F_->neg(a[k]);
  return out;
}

TruncSeries SeriesRing::scale(Fq c, const TruncSeries& a) const {
  TruncSeries out(N_);
  for (int k = 0; k < N_; ++k) out[k] = F_->mul(c, a[k]);
  return out;
}

TruncSeries SeriesRing::mul(const TruncSeries& a, const TruncSeries& b) const {
  TruncSeries out(N_);
  for (int i = 0; i < N_; ++i) {
    if (a[i].code == 0) continue;
    for (int j = 0; i + j < N_; ++j) {
      if (b[j].code == 0) continue;
      out[i + j] = F_->add(out[i + j], F_->mul(a[i], b[j]));
    }
  }
  return out;
}

TruncSeries SeriesRing::shift(const TruncSeries& a, int k) const {
  TruncSeries out(N_);
  for (int i = 0; i < N_; ++i) {
    int src = i - k;
    if (src >= 0 && src < N_) out[i] = a[src];
  }
  return out;
}

TruncSeries SeriesRing::inv(const TruncSeries& a) const {
  if (a[0].code == 0) throw DomainError("series is not a unit");
  TruncSeries out(N_);
  const Fq c0 = F_->inv(a[0]);
  out[0] = c0;
  for (int k = 1; k < N_; ++k) {
    Fq acc = F_->zero();
    for (int j = 1; j <= k; ++j) acc = F_->add(acc, F_->mul(a[j], out[k - j]));
    out[k] = F_->neg(F_->mul(acc, c0));
  }
  return out;
}

TruncSeries SeriesRing::phi(const TruncSeries& a) const {
  TruncSeries out(N_);
  const int p = this->p();
  for (int k = 0; static_cast<long long>(k) * p < N_; ++k) out[k * p] = a[k];
  return out;
}

Valuation SeriesRing::val(const TruncSeries& a) const {
  for (int k = 0; k < a.precision(); ++k)
    if (a[k].code != 0) return Valuation{k, a.precision()};
  return Valuation{std::nullopt, a.precision()};
}

SeriesMatrix SeriesRing::zero_matrix(int rows, int cols) const {
  return SeriesMatrix(rows, cols, zero());
}

SeriesMatrix SeriesRing::identity(int d) const {
  SeriesMatrix m = zero_matrix(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = one();
  return m;
}

SeriesMatrix SeriesRing::embed(const SeriesMatrix& m) const {
  SeriesMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = embed(m(i, j));
  return out;
}

SeriesMatrix SeriesRing::add(const SeriesMatrix& a, const SeriesMatrix& b) const {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix size mismatch");
  SeriesMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = add(a(i, j), b(i, j));
  return out;
}

SeriesMatrix SeriesRing::sub(const SeriesMatrix& a, const SeriesMatrix& b) const {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix size mismatch");
  SeriesMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = sub(a(i, j), b(i, j));
  return out;
}

SeriesMatrix SeriesRing::mul(const SeriesMatrix& a, const SeriesMatrix& b) const {
  if (a.cols() != b.rows()) throw InvalidInput("matrix size mismatch");
  SeriesMatrix out = zero_matrix(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) = add(out(i, j), mul(a(i, k), b(k, j)));
    }
  return out;
}

SeriesMatrix SeriesRing::phi(const SeriesMatrix& a) const {
  SeriesMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = phi(a(i, j));
  return out;
}

SeriesMatrix SeriesRing::from_constant(const FqMatrix& a) const {
  SeriesMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = constant(a(i, j));
  return out;
}

bool SeriesRing::is_zero(const SeriesMatrix& a) const {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

}  // namespace kisin
