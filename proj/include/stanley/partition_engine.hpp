#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "stanley/sdepth.hpp"
#include "stanley/structure.hpp"

namespace stanley {

/// [f_i, c'_i] of a decorated partition with the two degree-(d+1)
/// elements it contains. When exactly one label lies in W it is `u`;
/// otherwise `u` is the canonically smaller one.
struct BaseInterval {
  int index = 0;  ///< 1-based position of f_i in the canonical F
  Monomial f;
  Monomial top;
  Monomial u;
  Monomial u_prime;
};

/// A partition of I_b/J_b with sdepth d+2, where I_b = (F \ {f_dropped},
/// B \ {b}, E), together with its base intervals and the injection h.
/// Values are immutable; surgeries return new ones.
class PbPartition {
 public:
  /// Reads the decoration off `partition` and checks every invariant;
  /// throws InvalidInstance naming the first one that fails.
  static PbPartition decorate(const QuotientInstance& inst, const Monomial& b, int dropped,
                              IntervalPartition partition);

  const QuotientInstance& instance() const { return inst_; }
  const Monomial& b() const { return b_; }
  int dropped() const { return dropped_; }
  const Monomial& dropped_generator() const { return inst_.F[dropped_ - 1]; }
  const PosetSlice& poset() const { return poset_; }
  const IntervalPartition& partition() const { return partition_; }
  const std::vector<BaseInterval>& base_intervals() const { return base_; }
  const BaseInterval& base(int index) const;
  /// Degree-(d+1) slice of the full poset of I/J, and the lcms w_ij.
  const std::vector<Monomial>& B() const { return B_; }
  const std::vector<Monomial>& W() const { return W_; }

  /// u_i and u'_i over all base intervals, sorted.
  const std::vector<Monomial>& labels() const { return labels_; }
  bool is_label(const Monomial& m) const { return contains_sorted(labels_, m); }
  /// h: B \ {b, labels} -> C.
  const std::map<Monomial, Monomial>& h() const { return h_; }
  std::optional<Monomial> h_of(const Monomial& m) const;
  bool in_domain(const Monomial& m) const { return h_.count(m) != 0; }
  /// Restriction of h to E.
  std::map<Monomial, Monomial> E_intervals() const;
  /// Image lies in (b) or in the ideal of the labels.
  bool image_in_b(const Monomial& m) const;
  bool image_in_b_or_labels(const Monomial& m) const;

  friend bool operator==(const PbPartition& x, const PbPartition& y) {
    return x.b_ == y.b_ && x.dropped_ == y.dropped_ && x.partition_ == y.partition_ &&
           x.inst_ == y.inst_;
  }

 private:
  QuotientInstance inst_;
  Monomial b_;
  int dropped_ = 1;
  PosetSlice poset_;
  IntervalPartition partition_;
  std::vector<BaseInterval> base_;
  std::vector<Monomial> B_;
  std::vector<Monomial> W_;
  std::vector<Monomial> labels_;
  std::map<Monomial, Monomial> h_;
};

/// I_b = (F \ {f_dropped}, B \ {b}, E) for the instance.
MonomialIdeal pb_ideal(const QuotientInstance& inst, const Monomial& b, int dropped);

/// Least i with b in (f_i) but in no other (f_j).
std::optional<int> default_dropped_index(const QuotientInstance& inst, const Monomial& b);

/// Lexicographically least sdepth-(d+2) partition of I_b/J_b, decorated;
/// none when sdepth(I_b/J_b) <= d+1. Requires b in B and b outside (f_i)
/// for every kept i.
std::optional<PbPartition> build_pb(const QuotientInstance& inst, const Monomial& b, int dropped);

/// Decorates an explicit listing; elements of degree >= d+2 it leaves
/// uncovered become singletons.
PbPartition make_pb(const QuotientInstance& inst, const Monomial& b, int dropped,
                    std::vector<Interval> listing);

struct Path {
  std::vector<Monomial> steps;
  std::vector<Monomial> images;
  bool weak = false;
  bool bad = false;
  bool maximal = false;
};

enum class PathCondition { InDomain, Distinct, Linked };

class InvalidPath : public ArgumentError {
 public:
  InvalidPath(PathCondition which, const std::string& what) : ArgumentError(what), which_(which) {}
  PathCondition which() const { return which_; }

 private:
  PathCondition which_;
};

/// Validates the steps as a path of `pb` and classifies it.
Path classify_path(const PbPartition& pb, const std::vector<Monomial>& steps);

struct TUGSets {
  Monomial start;
  std::vector<Monomial> T;
  std::vector<Monomial> U;
  std::vector<Monomial> G;
  /// Some path from the start reaches an image in (b).
  bool bad_path_from_start = false;
  /// Every B-divisor of an element of U lies in T or among the labels.
  bool divisors_closed = false;
};

/// Ends of not-bad paths from `a1`, their images and the complement in B.
TUGSets compute_tug(const PbPartition& pb, const Monomial& a1);

/// Adds to `tug` everything reachable by a not-bad path from `seeds`
/// (elements of the domain of h), then recomputes U, G and the flags.
TUGSets extend_tug(const PbPartition& pb, const TUGSets& tug, const std::vector<Monomial>& seeds);

/// Replaces [f_i, c'_i] and [w, h(w)] by [f_i, h(w)] and [l, c'_i], where
/// the kept label of i divides h(w) and l is the other one; w becomes a
/// label. Requires f_i | w.
PbPartition swap_base(const PbPartition& pb, int index, const Monomial& w);

struct NormalizeResult {
  PbPartition pb;
  int swaps = 0;
  bool converged = true;  ///< false if the iteration cap stopped it
};

/// Swaps until no pair (i, j) violates the label conditions on h(w_ij);
/// capped at |B|^2 swaps.
NormalizeResult normalize_i0(const PbPartition& pb);

/// The label conditions normalize_i0 establishes; empty when they hold,
/// otherwise one line per violation.
std::vector<std::string> normalization_violations(const PbPartition& pb);

/// Rotates the intervals [a_k, m_k], v <= k <= e (e the last step) into
/// [a_v, m_e] and [a_{k+1}, m_k]. v is 1-based; v = e is the identity.
PbPartition rotate_path(const PbPartition& pb, const Path& path, int v);

/// Replaces the interval [a, target] of `pb` by [f, target] with f the
/// dropped generator, and returns the result as a partition of `target`
/// (by default the full poset of I/J). Intervals outside `target` are
/// dropped and intervals cut by it or by [f, target] shrink to their upper
/// part; throws PreconditionError naming an uncovered or doubly covered
/// monomial.
IntervalPartition promote_to_full_partition(const PbPartition& pb, const Monomial& f,
                                            const Monomial& target,
                                            const std::optional<PosetSlice>& target_poset = {});

/// The r = 4 configuration where omega of the dropped generator is the
/// image of an element of E, lies in (C3 \ W) and in (E), and the kept
/// base intervals carry the three lcms w_jk not involving the dropped one.
bool omega_configuration_flag(const PbPartition& pb);

}  // namespace stanley
