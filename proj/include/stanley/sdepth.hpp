#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stanley/poset.hpp"

namespace stanley {

/// [lo, hi] = { w in the poset : lo | w | hi }.
struct Interval {
  Monomial lo;
  Monomial hi;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// A set of intervals meant to partition a poset; `sdepth_value()` is the
/// least degree of an interval top.
class IntervalPartition {
 public:
  IntervalPartition() = default;
  explicit IntervalPartition(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  /// min over intervals of deg(hi); throws on an empty partition.
  int sdepth_value() const;
  /// Interval whose lo equals `m`, if any.
  const Interval* find_by_lo(const Monomial& m) const;

  friend bool operator==(const IntervalPartition&, const IntervalPartition&) = default;

 private:
  std::vector<Interval> intervals_;  // kept sorted by (lo, hi)
};

enum class Violation { None, NotAnInterval, Overlap, Uncovered };

struct ValidationResult {
  Violation kind = Violation::None;
  std::optional<Monomial> witness;
  std::string message;
  bool ok() const { return kind == Violation::None; }
};

/// Accepts iff every interval is well formed (ends in the poset, lo | hi),
/// intervals are pairwise disjoint and they cover the poset.
ValidationResult validate_partition(const PosetSlice& poset, const IntervalPartition& partition);

/// Adds [m, m] for every element of degree >= `min_degree` that no interval
/// covers. Used to turn a listing of the "interesting" intervals into a
/// full partition.
IntervalPartition complete_with_singletons(const PosetSlice& poset,
                                           std::vector<Interval> intervals, int min_degree);

/// Elements of the poset inside [lo, hi], in canonical order.
std::vector<Monomial> interval_elements(const PosetSlice& poset, const Interval& iv);

enum class Branching {
  /// Among lowest-degree uncovered elements, take the one with the fewest
  /// still-feasible intervals.
  FailFast,
  /// Always take the first uncovered element in canonical order; the first
  /// witness found is then the lexicographically least top assignment.
  Canonical,
};

struct SdepthOptions {
  /// Only consider interval tops of degree exactly k (tops above k shrink).
  bool trim = true;
  Branching branching = Branching::FailFast;
  /// Failed search states remembered before the table is flushed.
  std::size_t memo_limit = std::size_t{1} << 22;
};

/// A partition with sdepth_value >= k if one exists.
std::optional<IntervalPartition> sdepth_decision(const PosetSlice& poset, int k,
                                                 const SdepthOptions& options = {});

struct SdepthResult {
  int value = 0;
  IntervalPartition witness;
};

/// Exact Stanley depth: largest k whose decision succeeds.
SdepthResult sdepth(const PosetSlice& poset, const SdepthOptions& options = {});
SdepthResult sdepth(const QuotientInstance& inst, const SdepthOptions& options = {});

/// Exhaustive enumeration of every interval partition; independent of the
/// search above. Refuses posets larger than `bound`.
int brute_force_sdepth(const PosetSlice& poset, std::size_t bound = 14);

}  // namespace stanley
