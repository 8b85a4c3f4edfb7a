#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kisin/field.hpp"

namespace kisin {

// A power series in u truncated modulo u^N.
class TruncSeries {
 public:
  TruncSeries() = default;
  explicit TruncSeries(int N) : c_(static_cast<std::size_t>(N)) {}
  TruncSeries(std::vector<Fq> coeffs, int N);

  int precision() const { return static_cast<int>(c_.size()); }
  Fq operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  Fq& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<Fq>& coeffs() const { return c_; }

  bool is_zero() const;
  // Index of the highest nonzero coefficient, -1 for zero.
  int degree() const;

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  std::vector<Fq> c_;
};

// Valuation of a truncated series; empty when the series vanishes mod u^N,
// in which case the valuation is only known to be >= precision.
struct Valuation {
  std::optional<int> value;
  int precision = 0;
  bool infinite() const { return !value.has_value(); }
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using SeriesMatrix = Matrix<TruncSeries>;
using FqMatrix = Matrix<Fq>;

// Arithmetic in k_E[[u]] / u^N together with the p-power Frobenius twist
// u -> u^p (identity on k_E).
class SeriesRing {
 public:
  SeriesRing(const GaloisField& field, int N);

  const GaloisField& field() const { return *F_; }
  int p() const { return F_->characteristic(); }
  int precision() const { return N_; }

  TruncSeries zero() const { return TruncSeries(N_); }
  TruncSeries one() const { return constant(F_->one()); }
  TruncSeries constant(Fq c) const;
  TruncSeries monomial(Fq c, int k) const;
  TruncSeries from_coeffs(const std::vector<Fq>& coeffs) const;
  // Re-embeds a series at this ring's precision, truncating or zero-padding.
  TruncSeries embed(const TruncSeries& s) const;

  TruncSeries add(const TruncSeries& a, const TruncSeries& b) const;
  TruncSeries sub(const TruncSeries& a, const TruncSeries& b) const;
  TruncSeries neg(const TruncSeries& a) const;
  TruncSeries scale(Fq c, const TruncSeries& a) const;
  TruncSeries mul(const TruncSeries& a, const TruncSeries& b) const;
  TruncSeries shift(const TruncSeries& a, int k) const;  // multiply by u^k
  // Inverse of a unit; DomainError if the constant term vanishes.
  TruncSeries inv(const TruncSeries& a) const;
  TruncSeries phi(const TruncSeries& a) const;
  Valuation val(const TruncSeries& a) const;

  SeriesMatrix zero_matrix(int rows, int cols) const;
  SeriesMatrix identity(int d) const;
  SeriesMatrix embed(const SeriesMatrix& m) const;
  SeriesMatrix add(const SeriesMatrix& a, const SeriesMatrix& b) const;
  SeriesMatrix sub(const SeriesMatrix& a, const SeriesMatrix& b) const;
  SeriesMatrix mul(const SeriesMatrix& a, const SeriesMatrix& b) const;
  SeriesMatrix phi(const SeriesMatrix& a) const;
  SeriesMatrix from_constant(const FqMatrix& a) const;
  bool is_zero(const SeriesMatrix& a) const;

 private:
  const GaloisField* F_;
  int N_;
};

}  // namespace kisin
