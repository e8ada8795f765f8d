#include "stanley/partition_engine.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace stanley {

namespace {

std::vector<Monomial> pairwise_lcms(const std::vector<Monomial>& F) {
  std::vector<Monomial> w;
  for (std::size_t i = 0; i < F.size(); ++i) {
    for (std::size_t j = i + 1; j < F.size(); ++j) w.push_back(lcm(F[i], F[j]));
  }
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

void check_dropped(const QuotientInstance& inst, int dropped) {
  if (dropped < 1 || dropped > inst.r()) {
    throw ArgumentError("dropped index " + std::to_string(dropped) + " outside 1.." +
                        std::to_string(inst.r()));
  }
}

std::string show(const Interval& iv) { return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]"; }

/// Intervals of `pb` minus those listed, plus `added`.
IntervalPartition replace_intervals(const IntervalPartition& p, const std::vector<Interval>& removed,
                                    const std::vector<Interval>& added) {
  std::vector<Interval> out;
  for (const auto& iv : p.intervals()) {
    if (std::find(removed.begin(), removed.end(), iv) == removed.end()) out.push_back(iv);
  }
  out.insert(out.end(), added.begin(), added.end());
  return IntervalPartition(std::move(out));
}

}  // namespace

MonomialIdeal pb_ideal(const QuotientInstance& inst, const Monomial& b, int dropped) {
  check_dropped(inst, dropped);
  const PosetSlice full = build_poset(inst);
  std::vector<Monomial> gens;
  for (int i = 1; i <= inst.r(); ++i) {
    if (i != dropped) gens.push_back(inst.F[i - 1]);
  }
  for (const auto& m : full.by_degree(inst.d + 1)) {
    if (m != b) gens.push_back(m);
  }
  gens.insert(gens.end(), inst.E.begin(), inst.E.end());
  return MonomialIdeal(inst.n, gens);
}

std::optional<int> default_dropped_index(const QuotientInstance& inst, const Monomial& b) {
  for (int i = 1; i <= inst.r(); ++i) {
    if (!divides(inst.F[i - 1], b)) continue;
    bool only = true;
    for (int j = 1; j <= inst.r() && only; ++j) {
      if (j != i && divides(inst.F[j - 1], b)) only = false;
    }
    if (only) return i;
  }
  return std::nullopt;
}

PbPartition PbPartition::decorate(const QuotientInstance& inst, const Monomial& b, int dropped,
                                  IntervalPartition partition) {
  check_dropped(inst, dropped);
  PbPartition pb;
  pb.inst_ = inst;
  pb.b_ = b;
  pb.dropped_ = dropped;
  const PosetSlice full = build_poset(inst);
  pb.B_ = full.by_degree(inst.d + 1);
  pb.W_ = pairwise_lcms(inst.F);
  if (!contains_sorted(pb.B_, b)) throw ArgumentError(to_string(b) + " is not in B");
  pb.poset_ = full.restricted_to(pb_ideal(inst, b, dropped));
  if (pb.poset_.contains(b)) {
    throw InvalidInstance(to_string(b) + " still lies in I_b (it is in E or in a kept (f_i))");
  }

  const ValidationResult valid = validate_partition(pb.poset_, partition);
  if (!valid.ok()) throw InvalidInstance("not a partition of I_b/J_b: " + valid.message);
  const int want = inst.d + 2;
  for (const auto& iv : partition.intervals()) {
    if (iv.lo.degree() <= inst.d + 1 && iv.hi.degree() != want) {
      throw InvalidInstance("interval " + show(iv) + " does not end in C");
    }
    if (iv.hi.degree() < want) throw InvalidInstance("interval " + show(iv) + " has sdepth < d+2");
  }

  for (int i = 1; i <= inst.r(); ++i) {
    if (i == dropped) continue;
    const Monomial& f = inst.F[i - 1];
    const Interval* iv = partition.find_by_lo(f);
    if (iv == nullptr) throw InvalidInstance("no interval starts at " + to_string(f));
    std::vector<Monomial> labels;
    for (const auto& w : interval_elements(pb.poset_, *iv)) {
      if (w.degree() == inst.d + 1) labels.push_back(w);
    }
    if (labels.size() != 2) {
      throw InvalidInstance("base interval " + show(*iv) + " holds " +
                            std::to_string(labels.size()) + " elements of B instead of 2");
    }
    const bool w0 = contains_sorted(pb.W_, labels[0]);
    const bool w1 = contains_sorted(pb.W_, labels[1]);
    if (w1 && !w0) std::swap(labels[0], labels[1]);
    pb.base_.push_back({i, f, iv->hi, labels[0], labels[1]});
    pb.labels_.push_back(labels[0]);
    pb.labels_.push_back(labels[1]);
  }
  std::sort(pb.labels_.begin(), pb.labels_.end());

  std::set<Monomial> image;
  for (const auto& m : pb.B_) {
    if (m == b || pb.is_label(m)) continue;
    const Interval* iv = partition.find_by_lo(m);
    if (iv == nullptr) throw InvalidInstance(to_string(m) + " is not the bottom of an interval");
    pb.h_.emplace(m, iv->hi);
    if (!image.insert(iv->hi).second) throw InvalidInstance("h is not injective");
  }
  const std::size_t expected = pb.B_.size() - 2 * static_cast<std::size_t>(inst.r() - 1) - 1;
  if (image.size() != expected) {
    throw InvalidInstance("|Im h| = " + std::to_string(image.size()) + ", expected " +
                          std::to_string(expected));
  }
  pb.partition_ = std::move(partition);
  return pb;
}

const BaseInterval& PbPartition::base(int index) const {
  for (const auto& bi : base_) {
    if (bi.index == index) return bi;
  }
  throw ArgumentError("no base interval with index " + std::to_string(index));
}

std::optional<Monomial> PbPartition::h_of(const Monomial& m) const {
  const auto it = h_.find(m);
  if (it == h_.end()) return std::nullopt;
  return it->second;
}

std::map<Monomial, Monomial> PbPartition::E_intervals() const {
  std::map<Monomial, Monomial> out;
  for (const auto& e : inst_.E) {
    if (auto img = h_of(e)) out.emplace(e, *img);
  }
  return out;
}

bool PbPartition::image_in_b(const Monomial& m) const { return divides(b_, m); }

bool PbPartition::image_in_b_or_labels(const Monomial& m) const {
  return image_in_b(m) ||
         std::any_of(labels_.begin(), labels_.end(), [&](const Monomial& u) { return divides(u, m); });
}

std::optional<PbPartition> build_pb(const QuotientInstance& inst, const Monomial& b, int dropped) {
  check_dropped(inst, dropped);
  const PosetSlice full = build_poset(inst);
  if (!full.contains(b) || b.degree() != inst.d + 1) {
    throw ArgumentError(to_string(b) + " is not in B");
  }
  for (int i = 1; i <= inst.r(); ++i) {
    if (i != dropped && divides(inst.F[i - 1], b)) {
      throw ArgumentError(to_string(b) + " lies in (f_" + std::to_string(i) + ") which is kept");
    }
  }
  if (std::find(inst.E.begin(), inst.E.end(), b) != inst.E.end()) {
    throw ArgumentError(to_string(b) + " is a generator in E");
  }
  const PosetSlice poset = full.restricted_to(pb_ideal(inst, b, dropped));
  if (poset.empty()) return std::nullopt;
  SdepthOptions opt;
  opt.trim = true;
  opt.branching = Branching::Canonical;
  auto witness = sdepth_decision(poset, inst.d + 2, opt);
  if (!witness) return std::nullopt;
  return PbPartition::decorate(inst, b, dropped, std::move(*witness));
}

PbPartition make_pb(const QuotientInstance& inst, const Monomial& b, int dropped,
                    std::vector<Interval> listing) {
  check_dropped(inst, dropped);
  const PosetSlice poset = build_poset(inst).restricted_to(pb_ideal(inst, b, dropped));
  return PbPartition::decorate(inst, b, dropped,
                               complete_with_singletons(poset, std::move(listing), inst.d + 2));
}

Path classify_path(const PbPartition& pb, const std::vector<Monomial>& steps) {
  if (steps.empty()) throw ArgumentError("a path needs at least one step");
  Path path;
  path.steps = steps;
  for (std::size_t l = 0; l < steps.size(); ++l) {
    const auto img = pb.h_of(steps[l]);
    if (!img) {
      throw InvalidPath(PathCondition::InDomain,
                        "step " + to_string(steps[l]) + " is b, a label or outside B");
    }
    for (std::size_t j = 0; j < l; ++j) {
      if (steps[j] == steps[l]) {
        throw InvalidPath(PathCondition::Distinct, "step " + to_string(steps[l]) + " repeats");
      }
    }
    if (l > 0 && !divides(steps[l], path.images[l - 1])) {
      throw InvalidPath(PathCondition::Linked, to_string(steps[l]) + " does not divide h(" +
                                                   to_string(steps[l - 1]) + ") = " +
                                                   to_string(path.images[l - 1]));
    }
    path.images.push_back(*img);
  }
  for (const auto& m : path.images) {
    path.weak = path.weak || pb.image_in_b_or_labels(m);
    path.bad = path.bad || pb.image_in_b(m);
  }
  if (path.bad && !path.weak) throw Error("bad path that is not weak");
  path.maximal = true;
  for (const auto& div : b_divisors(path.images.back(), pb.B())) {
    const bool known = div == pb.b() || pb.is_label(div) ||
                       std::find(steps.begin(), steps.end(), div) != steps.end();
    if (!known) {
      path.maximal = false;
      break;
    }
  }
  return path;
}

namespace {

/// Domain elements reachable from `starts` along a' | h(a); with
/// `avoid_bad`, nodes whose image lies in (b) are neither entered nor
/// left.
std::set<Monomial> reach(const PbPartition& pb, const std::vector<Monomial>& starts,
                         bool avoid_bad) {
  std::set<Monomial> seen;
  std::deque<Monomial> queue;
  for (const auto& s : starts) {
    if (avoid_bad && pb.image_in_b(*pb.h_of(s))) continue;
    if (seen.insert(s).second) queue.push_back(s);
  }
  while (!queue.empty()) {
    const Monomial a = queue.front();
    queue.pop_front();
    for (const auto& next : b_divisors(*pb.h_of(a), pb.B())) {
      if (!pb.in_domain(next) || seen.count(next)) continue;
      if (avoid_bad && pb.image_in_b(*pb.h_of(next))) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  return seen;
}

TUGSets finish_tug(const PbPartition& pb, const Monomial& start, const std::set<Monomial>& T,
                   bool bad_path) {
  TUGSets out;
  out.start = start;
  out.T.assign(T.begin(), T.end());
  for (const auto& a : out.T) out.U.push_back(*pb.h_of(a));
  std::sort(out.U.begin(), out.U.end());
  for (const auto& m : pb.B()) {
    if (!T.count(m)) out.G.push_back(m);
  }
  out.bad_path_from_start = bad_path;
  out.divisors_closed = true;
  for (const auto& c : out.U) {
    for (const auto& div : b_divisors(c, pb.B())) {
      if (!T.count(div) && !pb.is_label(div)) out.divisors_closed = false;
    }
  }
  return out;
}

bool reaches_bad(const PbPartition& pb, const std::vector<Monomial>& starts) {
  for (const auto& a : reach(pb, starts, false)) {
    if (pb.image_in_b(*pb.h_of(a))) return true;
  }
  return false;
}

}  // namespace

TUGSets compute_tug(const PbPartition& pb, const Monomial& a1) {
  if (!pb.in_domain(a1)) {
    throw ArgumentError(to_string(a1) + " is b, a label or outside B");
  }
  return finish_tug(pb, a1, reach(pb, {a1}, true), reaches_bad(pb, {a1}));
}

TUGSets extend_tug(const PbPartition& pb, const TUGSets& tug, const std::vector<Monomial>& seeds) {
  std::vector<Monomial> starts = tug.T;
  for (const auto& s : seeds) {
    if (!pb.in_domain(s)) throw ArgumentError(to_string(s) + " is b, a label or outside B");
    starts.push_back(s);
  }
  const bool bad = tug.bad_path_from_start || reaches_bad(pb, seeds);
  return finish_tug(pb, tug.start, reach(pb, starts, true), bad);
}

PbPartition swap_base(const PbPartition& pb, int index, const Monomial& w) {
  const BaseInterval& base = pb.base(index);
  const auto hw = pb.h_of(w);
  if (!hw) throw ArgumentError(to_string(w) + " is not in the domain of h");
  if (!divides(base.f, w)) {
    throw ArgumentError(to_string(base.f) + " does not divide " + to_string(w));
  }
  Monomial released;
  if (divides(base.u, *hw)) {
    released = base.u_prime;
  } else if (divides(base.u_prime, *hw)) {
    released = base.u;
  } else {
    throw ArgumentError("h(" + to_string(w) + ") = " + to_string(*hw) +
                        " is a multiple of neither label of " + to_string(base.f));
  }
  IntervalPartition next = replace_intervals(pb.partition(), {{base.f, base.top}, {w, *hw}},
                                             {{base.f, *hw}, {released, base.top}});
  return PbPartition::decorate(pb.instance(), pb.b(), pb.dropped(), std::move(next));
}

namespace {

struct LabelViolation {
  std::string text;
  int swap_index;
  Monomial w;
};

std::optional<Monomial> label_dividing(const BaseInterval& bi, const Monomial& m) {
  if (divides(bi.u, m)) return bi.u;
  if (divides(bi.u_prime, m)) return bi.u_prime;
  return std::nullopt;
}

std::vector<LabelViolation> label_violations(const PbPartition& pb) {
  std::vector<LabelViolation> out;
  const auto& inst = pb.instance();
  const auto in_w = [&](const Monomial& m) { return contains_sorted(pb.W(), m); };
  for (const auto& bj : pb.base_intervals()) {
    const int j = bj.index;
    const int w_count = in_w(bj.u) + in_w(bj.u_prime);
    for (int i = 1; i <= inst.r(); ++i) {
      if (i == j) continue;
      const Monomial w = lcm(inst.F[i - 1], inst.F[j - 1]);
      const auto hw = pb.h_of(w);
      if (!hw) continue;
      const auto lj = label_dividing(bj, *hw);
      if (!lj) continue;
      const std::string pair = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      // (1): both dividing labels outside W; checked once per unordered pair.
      if (i != pb.dropped() && i < j && !in_w(*lj)) {
        const auto li = label_dividing(pb.base(i), *hw);
        if (li && !in_w(*li)) {
          out.push_back({"(1) " + pair + ": h(" + to_string(w) + ") in (" + to_string(*li) +
                             ") and (" + to_string(*lj) + ")",
                         i, w});
          continue;
        }
      }
      if (w_count == 1) {
        // (2): u_j in W, u'_j outside.
        if (in_w(*lj)) {
          out.push_back({"(2) " + pair + ": h(" + to_string(w) + ") in (" + to_string(*lj) + ")",
                         j, w});
        } else if (i == pb.dropped()) {
          out.push_back({"(2) " + pair + ": h(" + to_string(w) + ") in (" + to_string(*lj) +
                             ") with i the dropped index",
                         j, w});
        }
      } else if (w_count == 0) {
        out.push_back({"(3) " + pair + ": h(" + to_string(w) + ") in (" + to_string(*lj) + ")",
                       j, w});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> normalization_violations(const PbPartition& pb) {
  std::vector<std::string> out;
  for (auto& v : label_violations(pb)) out.push_back(std::move(v.text));
  return out;
}

NormalizeResult normalize_i0(const PbPartition& pb) {
  NormalizeResult result{pb, 0, true};
  const int cap = static_cast<int>(pb.B().size() * pb.B().size());
  while (true) {
    const auto violations = label_violations(result.pb);
    if (violations.empty()) break;
    if (result.swaps >= cap) {
      result.converged = false;
      break;
    }
    const auto& v = violations.front();
    result.pb = swap_base(result.pb, v.swap_index, v.w);
    ++result.swaps;
  }
  return result;
}

PbPartition rotate_path(const PbPartition& pb, const Path& path, int v) {
  const Path checked = classify_path(pb, path.steps);
  const int e = static_cast<int>(checked.steps.size());
  if (v < 1 || v > e) {
    throw ArgumentError("rotation index " + std::to_string(v) + " outside 1.." + std::to_string(e));
  }
  if (v == e) return pb;
  const auto& a = checked.steps;
  const auto& m = checked.images;
  if (!divides(a[v - 1], m[e - 1])) {
    throw ArgumentError(to_string(a[v - 1]) + " does not divide " + to_string(m[e - 1]));
  }
  std::vector<Interval> removed, added;
  for (int k = v; k <= e; ++k) removed.push_back({a[k - 1], m[k - 1]});
  added.push_back({a[v - 1], m[e - 1]});
  for (int k = v; k < e; ++k) added.push_back({a[k], m[k - 1]});
  return PbPartition::decorate(pb.instance(), pb.b(), pb.dropped(),
                               replace_intervals(pb.partition(), removed, added));
}

IntervalPartition promote_to_full_partition(const PbPartition& pb, const Monomial& f,
                                            const Monomial& target,
                                            const std::optional<PosetSlice>& target_poset) {
  if (f != pb.dropped_generator()) {
    throw ArgumentError(to_string(f) + " is not the dropped generator " +
                        to_string(pb.dropped_generator()));
  }
  if (!divides(f, target)) throw ArgumentError(to_string(f) + " does not divide " + to_string(target));
  const auto& ivs = pb.partition().intervals();
  const auto replaced = std::find_if(ivs.begin(), ivs.end(),
                                     [&](const Interval& iv) { return iv.hi == target; });
  if (replaced == ivs.end()) throw ArgumentError("no interval of P_b ends at " + to_string(target));

  const PosetSlice poset = target_poset ? *target_poset : build_poset(pb.instance());
  const Interval fresh{f, target};
  if (!poset.contains(f) || !poset.contains(target)) {
    throw PreconditionError(show(fresh) + " is not an interval of the target poset");
  }
  const auto fresh_elems = interval_elements(poset, fresh);
  std::vector<Interval> out{fresh};
  for (auto it = ivs.begin(); it != ivs.end(); ++it) {
    if (it == replaced) continue;
    std::vector<Monomial> rest;
    for (const auto& w : interval_elements(poset, *it)) {
      if (!std::binary_search(fresh_elems.begin(), fresh_elems.end(), w)) rest.push_back(w);
    }
    if (rest.empty()) continue;
    // What is left must be an upper part [lo', hi] of the old interval.
    std::uint64_t meet = ~std::uint64_t{0};
    for (const auto& w : rest) meet &= w.support();
    const Interval shrunk{Monomial(poset.ambient(), meet), it->hi};
    if (!poset.contains(shrunk.lo) || interval_elements(poset, shrunk) != rest) {
      throw PreconditionError("what remains of " + show(*it) + " is not an interval");
    }
    out.push_back(shrunk);
  }
  IntervalPartition result(std::move(out));
  const ValidationResult valid = validate_partition(poset, result);
  if (!valid.ok()) throw PreconditionError("promotion fails: " + valid.message);
  return result;
}

bool omega_configuration_flag(const PbPartition& pb) {
  const auto& inst = pb.instance();
  if (inst.r() != 4) return false;
  const int k = pb.dropped();
  Monomial omega = Monomial::unit(inst.n);
  std::vector<Monomial> kept_lcms;
  for (int i = 1; i <= 4; ++i) {
    if (i == k) continue;
    omega = lcm(omega, inst.F[i - 1]);
    for (int j = i + 1; j <= 4; ++j) {
      if (j != k) kept_lcms.push_back(lcm(inst.F[i - 1], inst.F[j - 1]));
    }
  }
  const StructureReport rep = analyze(inst);
  const MonomialIdeal e_ideal(inst.n, inst.E);
  if (!contains_sorted(rep.C3, omega) || contains_sorted(rep.W, omega) || !e_ideal.contains(omega)) {
    return false;
  }
  bool image_of_e = false;
  for (const auto& [e, c] : pb.E_intervals()) image_of_e = image_of_e || c == omega;
  if (!image_of_e) return false;
  std::set<Monomial> hit;
  for (const auto& bi : pb.base_intervals()) {
    const bool u_in = std::find(kept_lcms.begin(), kept_lcms.end(), bi.u) != kept_lcms.end();
    const bool up_in = std::find(kept_lcms.begin(), kept_lcms.end(), bi.u_prime) != kept_lcms.end();
    if (u_in) hit.insert(bi.u);
    if (up_in) hit.insert(bi.u_prime);
    if (!u_in && !up_in) return false;
  }
  return hit.size() == 3;
}

}  // namespace stanley
