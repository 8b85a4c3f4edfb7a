#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kisin/field.hpp"

namespace kisin {

// Restriction of a character to G_infinity: inertia exponent residue modulo
// p^f - 1 together with the unramified unit.
struct CharClass {
  std::int64_t e = 0;
  Fq a;
  friend bool operator==(const CharClass&, const CharClass&) = default;
};

// f columns h_s, each a set of d distinct integers (stored ascending).
struct WeightTemplate {
  std::vector<std::vector<int>> h;

  int f() const { return static_cast<int>(h.size()); }
  int d() const { return h.empty() ? 0 : static_cast<int>(h.front().size()); }
  // Throws InvalidInput unless every h_s has d distinct entries in [0, p].
  void validate(int p) const;
};

// A d x f integer matrix, row-major.
struct Model {
  int d = 0;
  int f = 0;
  std::vector<int> n;

  Model() = default;
  Model(int rows, int cols) : d(rows), f(cols), n(static_cast<std::size_t>(rows) * cols, 0) {}
  static Model from_rows(const std::vector<std::vector<int>>& rows);

  int& at(int i, int s) { return n[static_cast<std::size_t>(i) * f + s]; }
  int at(int i, int s) const { return n[static_cast<std::size_t>(i) * f + s]; }
  std::vector<int> row(int i) const;
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const Model&, const Model&) = default;
  friend auto operator<=>(const Model&, const Model&) = default;
};

std::int64_t row_residue(const Model& m, int i, int p);
CharClass char_of_row(const Model& m, int i, Fq unit, int p);

// Checks both model conditions against an ordered character list.
bool is_model(const Model& m, std::span<const CharClass> chars, const WeightTemplate& w, int p);

std::vector<Model> enumerate_models(std::span<const CharClass> chars, const WeightTemplate& w, int p);

struct C1Result {
  bool unique = false;
  std::vector<Model> models;
};
C1Result check_c1(std::span<const CharClass> chars, const WeightTemplate& w, int p);

// Sufficient cases for uniqueness of the model, as a sorted list from {1, 2, 3}:
//   1: f = 1 and no two elements of h_0 differ by p - 1;
//   2: no two elements of any h_s differ by 1, and p - 1 is missing from some h_s;
//   3: every h_s lies in [0, p - 1], and p - 1 is missing from some h_s.
std::vector<int> c1_sufficient(const WeightTemplate& w, int p);

struct C3Result {
  bool holds = false;
  std::optional<int> witness;  // smallest s with no pair differing by p - 1
};
C3Result check_c3(const WeightTemplate& w, int p);

enum class PlsPattern { AllPMinusOne, Carry };

// Partial line swap on the cyclic segment start, ..., start + length - 1
// (indices mod f) of two rows, where row_a - row_b = sign * pattern on the
// segment. Carry is (-1, p-1, ..., p-1, p).
struct PlsMove {
  int row_a = 0;
  int row_b = 0;
  int start = 0;
  int length = 0;
  int sign = 1;
  PlsPattern pattern = PlsPattern::AllPMinusOne;
  friend bool operator==(const PlsMove&, const PlsMove&) = default;
};

// Cyclic admits segments starting anywhere on the row cycle; Prefix only
// segments starting at index 0.
enum class PlsMode { Cyclic, Prefix };

std::vector<PlsMove> pls_moves(const Model& m, int p, PlsMode mode = PlsMode::Cyclic);

struct PlsResult {
  Model model;
  bool valid = false;  // every row keeps its weighted residue
};
PlsResult pls_apply(const Model& m, const PlsMove& move, int p);

// Models grouped into components of the graph whose edges are
// residue-preserving partial line swaps. Each component is sorted, and
// components are ordered by their smallest member.
std::vector<std::vector<Model>> pls_reachability(std::span<const CharClass> chars, const WeightTemplate& w, int p,
                                                 PlsMode mode = PlsMode::Cyclic);

}  // namespace kisin
