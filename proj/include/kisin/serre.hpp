#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kisin/field.hpp"
#include "kisin/models.hpp"
#include "kisin/rank1.hpp"

namespace kisin {

// Restriction of the reduced cyclotomic character: exponent (1, ..., 1)
// weighted, modulo p^f - 1, with a configurable unramified part.
struct CycloClass {
  std::int64_t modulus = 1;
  std::int64_t e_cyc = 0;
  Fq a_cyc{1};
};

CycloClass make_cyclo(int p, int f, Fq a_cyc = Fq{1});

struct C2AResult {
  bool holds = true;
  std::vector<std::pair<int, int>> violations;  // (i, j) with i < j
};

// chi_i^{-1} chi_j must avoid the trivial and cyclotomic classes for i < j.
C2AResult check_c2a(const GaloisField& F, const std::vector<CharClass>& chars, const CycloClass& cyc);

struct C2BResult {
  bool holds = true;
  std::optional<std::pair<int, int>> violation;
};

// Fails when some i < j has t_i = (0, ..., 0) and t_j = (p, ..., p).
C2BResult check_c2b(const std::vector<Rank1Kisin>& seq, int p);

struct CaseResult {
  int id = 0;
  bool holds = false;
  std::optional<int> s0;        // witness for "p - 1 missing" style clauses
  std::optional<int> s0_prime;  // witness for the "p missing" clause of case 3
};

struct CaseSet {
  std::vector<CaseResult> cases;  // ids 1..4 in order
  std::vector<int> satisfied() const;
};

// Cases 1 and 2 need chars for their character clause and fail without them.
CaseSet corollary_cases(const GaloisField& F, const WeightTemplate& w, const std::optional<std::vector<CharClass>>& chars,
                        const CycloClass& cyc, int p);

// Rows a[s] = (a_{s,1} >= ... >= a_{s,d}).
struct SerreWeight {
  std::vector<std::vector<int>> a;

  int f() const { return static_cast<int>(a.size()); }
  int d() const { return a.empty() ? 0 : static_cast<int>(a.front().size()); }
  // Throws InvalidInput unless rows are nonempty, equal length and weakly decreasing.
  void validate() const;
  // a_{s,1} - a_{s,d} <= p - 1 for every s.
  bool serre_bound(int p) const;
  // a_{s,1} - a_{s,d} <= p - d + 1 for every s.
  bool standing_bound(int p) const;
};

// h_s = { a_{s,i} - a_{s,d} + d - i }, normalized so that 0 is the
// smallest weight.
WeightTemplate serre_to_hodge(const SerreWeight& w);

CaseSet application_conditions(const GaloisField& F, const SerreWeight& w,
                               const std::optional<std::vector<CharClass>>& chars, const CycloClass& cyc, int p);

struct GateReport {
  bool c1 = false;
  std::optional<bool> c2a;
  std::optional<bool> c2b;
  std::vector<int> corollary_cases;
  std::vector<int> application_cases;
  std::optional<bool> serre_bound_ok;     // a_{s,1} - a_{s,d} <= p - 1
  std::optional<bool> standing_bound_ok;  // a_{s,1} - a_{s,d} <= p - d + 1
  bool theorem_main_gate = false;
};

// c1 from the model count when chars are given, otherwise from the
// sufficient criteria; c2b from the rows of the unique model.
GateReport evaluate_gate(const GaloisField& F, const WeightTemplate& w, const std::optional<std::vector<CharClass>>& chars,
                         const CycloClass& cyc, int p, const std::optional<SerreWeight>& serre = {});

}  // namespace kisin
