#pragma once

#include <map>
#include <optional>
#include <vector>

#include "stanley/poset.hpp"

namespace stanley {

/// Hypotheses an instance satisfies.
struct HypothesisFlags {
  int r = 0;
  bool case_r_le_4 = false;
  /// Smallest t outside the supports of F with (B \ E) meeting (x_t) and
  /// E inside (x_t); only looked for when r = 5.
  std::optional<int> case_r5_t;
  /// 2r <= s <= q + r.
  bool range_ok = false;
  /// 8 <= s <= q + 4, the literal four-generator form of the range.
  bool range_ok_r4_literal = false;
  /// 1-based i with omega_i in (C3 \ W) and in (E); r = 4 only.
  std::vector<int> omega_obstruction;
};

struct StructureReport {
  int s = 0;
  int q = 0;
  std::vector<Monomial> B;  ///< degree d+1 slice of the poset
  std::vector<Monomial> C;  ///< degree d+2 slice of the poset
  std::vector<Monomial> W;  ///< distinct lcm(f_i, f_j), i < j
  std::vector<Monomial> C2;
  std::vector<Monomial> C3;
  std::vector<Monomial> C23;
  /// i (1-based into the canonical F) -> lcm of F without f_i; r = 4 only.
  std::map<int, Monomial> omegas;
  HypothesisFlags flags;
};

StructureReport analyze(const QuotientInstance& inst);
StructureReport analyze(const QuotientInstance& inst, const PosetSlice& poset);
HypothesisFlags detect_hypotheses(const StructureReport& report, const QuotientInstance& inst);
bool check_E_degree_normalized(const QuotientInstance& inst);

/// Degree-(d+1) divisors of c that lie in `B` (B must be sorted).
std::vector<Monomial> b_divisors(const Monomial& c, const std::vector<Monomial>& B);

/// Sorted-vector membership for canonical monomial sets.
bool contains_sorted(const std::vector<Monomial>& set, const Monomial& m);

}  // namespace stanley
