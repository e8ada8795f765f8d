#include "stanley/sdepth.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace stanley {

IntervalPartition::IntervalPartition(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  std::sort(intervals_.begin(), intervals_.end());
}

int IntervalPartition::sdepth_value() const {
  if (intervals_.empty()) throw PreconditionError("sdepth of an empty partition");
  int best = std::numeric_limits<int>::max();
  for (const auto& iv : intervals_) best = std::min(best, iv.hi.degree());
  return best;
}

const Interval* IntervalPartition::find_by_lo(const Monomial& m) const {
  auto it = std::lower_bound(intervals_.begin(), intervals_.end(), m,
                             [](const Interval& iv, const Monomial& key) { return iv.lo < key; });
  if (it == intervals_.end() || it->lo != m) return nullptr;
  return &*it;
}

std::vector<Monomial> interval_elements(const PosetSlice& poset, const Interval& iv) {
  std::vector<Monomial> out;
  if (!divides(iv.lo, iv.hi)) return out;
  const std::uint64_t base = iv.lo.support();
  const std::uint64_t free = iv.hi.support() & ~base;
  std::uint64_t sub = free;
  while (true) {
    const Monomial w(iv.lo.ambient(), base | sub);
    if (poset.contains(w)) out.push_back(w);
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ValidationResult validate_partition(const PosetSlice& poset, const IntervalPartition& partition) {
  for (const auto& iv : partition.intervals()) {
    if (!poset.contains(iv.lo) || !poset.contains(iv.hi) || !divides(iv.lo, iv.hi)) {
      const Monomial& bad = poset.contains(iv.lo) ? iv.hi : iv.lo;
      return {Violation::NotAnInterval, bad,
              "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "] is not an interval of the poset"};
    }
  }
  std::vector<char> covered(poset.size(), 0);
  for (const auto& iv : partition.intervals()) {
    for (const auto& w : interval_elements(poset, iv)) {
      const std::size_t i = *poset.index_of(w);
      if (covered[i]) {
        return {Violation::Overlap, w, to_string(w) + " lies in two intervals"};
      }
      covered[i] = 1;
    }
  }
  for (std::size_t i = 0; i < poset.size(); ++i) {
    if (!covered[i]) {
      return {Violation::Uncovered, poset[i], to_string(poset[i]) + " is not covered"};
    }
  }
  return {};
}

IntervalPartition complete_with_singletons(const PosetSlice& poset,
                                           std::vector<Interval> intervals, int min_degree) {
  std::vector<char> covered(poset.size(), 0);
  for (const auto& iv : intervals) {
    for (const auto& w : interval_elements(poset, iv)) covered[*poset.index_of(w)] = 1;
  }
  for (std::size_t i = 0; i < poset.size(); ++i) {
    if (!covered[i] && poset[i].degree() >= min_degree) intervals.push_back({poset[i], poset[i]});
  }
  return IntervalPartition(std::move(intervals));
}

namespace {

using Words = std::vector<std::uint64_t>;

struct WordsHash {
  std::size_t operator()(const Words& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : w) h = (h ^ x) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

bool intersects(const Words& a, const Words& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

/// Number of elements of degree < k (they form a prefix).
std::size_t count_below(const PosetSlice& poset, int k) {
  if (k <= 0) return 0;
  if (k > poset.ambient()) return poset.size();
  return poset.degree_range(k).first;
}

class DecisionSearch {
 public:
  DecisionSearch(const PosetSlice& poset, int k, const SdepthOptions& opt)
      : poset_(poset), k_(k), opt_(opt) {
    needed_ = count_below(poset, k);
    words_ = (poset.size() + 63) / 64;
    covered_.assign(words_, 0);
    build_candidates();
  }

  std::optional<IntervalPartition> run() {
    if (!solve()) return std::nullopt;
    std::vector<Interval> intervals;
    for (const auto& [elem, cand] : chosen_) {
      intervals.push_back({poset_[elem], poset_[cands_[elem][cand].top]});
    }
    for (std::size_t i = 0; i < poset_.size(); ++i) {
      if (!test(covered_, i)) intervals.push_back({poset_[i], poset_[i]});
    }
    return IntervalPartition(std::move(intervals));
  }

 private:
  struct Candidate {
    std::size_t top;
    Words mask;
  };

  static bool test(const Words& w, std::size_t i) { return (w[i / 64] >> (i % 64)) & 1U; }
  static void set(Words& w, std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }

  void build_candidates() {
    cands_.resize(needed_);
    std::size_t top_first, top_last;
    if (opt_.trim) {
      std::tie(top_first, top_last) = poset_.degree_range(k_);
    } else {
      top_first = count_below(poset_, k_);
      top_last = poset_.size();
    }
    for (std::size_t i = 0; i < needed_; ++i) {
      const Monomial& m = poset_[i];
      for (std::size_t t = top_first; t < top_last; ++t) {
        const Monomial& v = poset_[t];
        if (!divides(m, v)) continue;
        Candidate c{t, Words(words_, 0)};
        for (const auto& w : interval_elements(poset_, {m, v})) set(c.mask, *poset_.index_of(w));
        cands_[i].push_back(std::move(c));
      }
    }
  }

  std::size_t feasible_count(std::size_t i) const {
    std::size_t count = 0;
    for (const auto& c : cands_[i]) {
      if (!intersects(c.mask, covered_)) ++count;
    }
    return count;
  }

  bool solve() {
    if (failed_.count(covered_)) return false;

    // Forward check every open element and choose where to branch.
    std::size_t pick = needed_;
    std::size_t pick_count = std::numeric_limits<std::size_t>::max();
    int pick_degree = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < needed_; ++i) {
      if (test(covered_, i)) continue;
      const std::size_t count = feasible_count(i);
      if (count == 0) return remember_failure();
      if (opt_.branching == Branching::Canonical) {
        if (pick == needed_) pick = i;
        continue;
      }
      const int deg = poset_[i].degree();
      if (deg < pick_degree || (deg == pick_degree && count < pick_count)) {
        pick = i;
        pick_degree = deg;
        pick_count = count;
      }
    }
    if (pick == needed_) return true;

    // The branch element has least degree among open ones, so it is the
    // bottom of whatever interval covers it.
    const Words saved = covered_;
    for (std::size_t c = 0; c < cands_[pick].size(); ++c) {
      const Candidate& cand = cands_[pick][c];
      if (intersects(cand.mask, covered_)) continue;
      for (std::size_t w = 0; w < words_; ++w) covered_[w] |= cand.mask[w];
      chosen_.emplace_back(pick, c);
      if (solve()) return true;
      chosen_.pop_back();
      covered_ = saved;
    }
    return remember_failure();
  }

  bool remember_failure() {
    if (failed_.size() >= opt_.memo_limit) failed_.clear();
    failed_.insert(covered_);
    return false;
  }

  const PosetSlice& poset_;
  int k_;
  SdepthOptions opt_;
  std::size_t needed_ = 0;  // elements of degree < k occupy [0, needed_)
  std::size_t words_ = 0;
  std::vector<std::vector<Candidate>> cands_;
  Words covered_;
  std::vector<std::pair<std::size_t, std::size_t>> chosen_;
  std::unordered_set<Words, WordsHash> failed_;
};

}  // namespace

std::optional<IntervalPartition> sdepth_decision(const PosetSlice& poset, int k,
                                                 const SdepthOptions& options) {
  if (poset.empty()) throw PreconditionError("sdepth decision on an empty poset");
  return DecisionSearch(poset, k, options).run();
}

SdepthResult sdepth(const PosetSlice& poset, const SdepthOptions& options) {
  if (poset.empty()) throw PreconditionError("sdepth of an empty poset");
  const int lower = poset.min_degree();
  SdepthResult result{lower, *sdepth_decision(poset, lower, options)};
  // Decisions are monotone in k; climb until the first failure.
  for (int k = lower + 1; k <= poset.max_degree(); ++k) {
    auto witness = sdepth_decision(poset, k, options);
    if (!witness) break;
    result = {k, std::move(*witness)};
  }
  return result;
}

SdepthResult sdepth(const QuotientInstance& inst, const SdepthOptions& options) {
  return sdepth(build_poset(inst), options);
}

namespace {

class BruteForce {
 public:
  explicit BruteForce(const PosetSlice& poset) : poset_(poset), covered_(poset.size(), 0) {}

  int run() {
    recurse(std::numeric_limits<int>::max());
    return best_;
  }

 private:
  void recurse(int current_min) {
    std::size_t first = 0;
    while (first < poset_.size() && covered_[first]) ++first;
    if (first == poset_.size()) {
      best_ = std::max(best_, current_min);
      return;
    }
    if (current_min <= best_) return;
    const Monomial& m = poset_[first];
    for (std::size_t t = first; t < poset_.size(); ++t) {
      const Monomial& v = poset_[t];
      if (!divides(m, v)) continue;
      std::vector<std::size_t> members;
      bool free = true;
      for (std::size_t w = first; w < poset_.size() && free; ++w) {
        if (divides(m, poset_[w]) && divides(poset_[w], v)) {
          if (covered_[w]) free = false;
          members.push_back(w);
        }
      }
      if (!free) continue;
      for (auto w : members) covered_[w] = 1;
      recurse(std::min(current_min, v.degree()));
      for (auto w : members) covered_[w] = 0;
    }
  }

  const PosetSlice& poset_;
  std::vector<char> covered_;
  int best_ = -1;
};

}  // namespace

int brute_force_sdepth(const PosetSlice& poset, std::size_t bound) {
  if (poset.empty()) throw PreconditionError("sdepth of an empty poset");
  if (poset.size() > bound) {
    throw SizeLimitExceeded("brute-force sdepth refuses a poset of " +
                            std::to_string(poset.size()) + " elements (bound " +
                            std::to_string(bound) + ")");
  }
  return BruteForce(poset).run();
}

}  // namespace stanley
