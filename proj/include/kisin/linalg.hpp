#pragma once

#include <optional>
#include <vector>

#include "kisin/field.hpp"
#include "kisin/series.hpp"

namespace kisin {

struct EchelonForm {
  FqMatrix rref;
  std::vector<int> pivots;  // pivot column of each nonzero row, increasing
};

// Reduced row echelon form. Pivot columns form the greedy (leftmost)
// basis of the column space.
EchelonForm row_reduce(const GaloisField& F, FqMatrix m);

int rank(const GaloisField& F, const FqMatrix& m);
Fq determinant(const GaloisField& F, const FqMatrix& m);
bool is_invertible(const GaloisField& F, const FqMatrix& m);
std::vector<std::vector<Fq>> nullspace(const GaloisField& F, const FqMatrix& m);
// Some solution of m x = b, or nothing if the system is inconsistent.
std::optional<std::vector<Fq>> solve(const GaloisField& F, const FqMatrix& m, const std::vector<Fq>& b);

FqMatrix identity_matrix(const GaloisField& F, int d);
FqMatrix mul(const GaloisField& F, const FqMatrix& a, const FqMatrix& b);

}  // namespace kisin
