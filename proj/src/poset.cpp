#include "stanley/poset.hpp"

#include <algorithm>
#include <unordered_set>

namespace stanley {

PosetSlice PosetSlice::from_sorted(int n, std::vector<Monomial> elements) {
  PosetSlice p;
  p.n_ = n;
  p.elements_ = std::move(elements);
  p.index_.reserve(p.elements_.size());
  for (std::size_t i = 0; i < p.elements_.size(); ++i) p.index_[p.elements_[i].support()] = i;
  p.degree_start_.assign(static_cast<std::size_t>(n) + 2, 0);
  std::size_t pos = 0;
  for (int k = 0; k <= n + 1; ++k) {
    while (pos < p.elements_.size() && p.elements_[pos].degree() < k) ++pos;
    p.degree_start_[k] = pos;
  }
  return p;
}

PosetSlice PosetSlice::between(const MonomialIdeal& upper, const MonomialIdeal& lower,
                               std::size_t cap) {
  if (upper.ambient() != lower.ambient()) throw AmbientMismatch("poset of ideals in different rings");
  const int n = upper.ambient();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> frontier;
  for (const auto& g : upper.generators()) {
    if (!lower.contains(g) && seen.insert(g.support()).second) frontier.push_back(g.support());
  }
  // Every element is reachable through a chain of divisors that avoids the
  // up-set `lower`, so pruning there loses nothing.
  while (!frontier.empty()) {
    const std::uint64_t m = frontier.back();
    frontier.pop_back();
    for_each_variable(all & ~m, [&](int v) {
      const std::uint64_t next = m | (std::uint64_t{1} << (v - 1));
      if (seen.count(next)) return;
      if (lower.contains(Monomial(n, next))) return;
      seen.insert(next);
      if (seen.size() > cap) {
        throw SizeLimitExceeded("poset exceeds " + std::to_string(cap) + " elements");
      }
      frontier.push_back(next);
    });
  }
  std::vector<Monomial> elements;
  elements.reserve(seen.size());
  for (auto bits : seen) elements.emplace_back(n, bits);
  std::sort(elements.begin(), elements.end());
  return from_sorted(n, std::move(elements));
}

std::optional<std::size_t> PosetSlice::index_of(const Monomial& m) const {
  auto it = index_.find(m.support());
  if (it == index_.end() || m.ambient() != n_) return std::nullopt;
  return it->second;
}

std::pair<std::size_t, std::size_t> PosetSlice::degree_range(int k) const {
  if (k < 0 || k > n_) return {0, 0};
  return {degree_start_[k], degree_start_[k + 1]};
}

std::vector<Monomial> PosetSlice::by_degree(int k) const {
  const auto [first, last] = degree_range(k);
  return {elements_.begin() + static_cast<std::ptrdiff_t>(first),
          elements_.begin() + static_cast<std::ptrdiff_t>(last)};
}

int PosetSlice::min_degree() const {
  if (elements_.empty()) throw PreconditionError("empty poset has no minimum degree");
  return elements_.front().degree();
}

int PosetSlice::max_degree() const {
  if (elements_.empty()) throw PreconditionError("empty poset has no maximum degree");
  return elements_.back().degree();
}

PosetSlice PosetSlice::restricted_to(const MonomialIdeal& ideal) const {
  std::vector<Monomial> kept;
  for (const auto& m : elements_) {
    if (ideal.contains(m)) kept.push_back(m);
  }
  return from_sorted(n_, std::move(kept));
}

PosetSlice PosetSlice::excluding(const MonomialIdeal& ideal) const {
  std::vector<Monomial> kept;
  for (const auto& m : elements_) {
    if (!ideal.contains(m)) kept.push_back(m);
  }
  return from_sorted(n_, std::move(kept));
}

PosetSlice build_poset(const QuotientInstance& inst, std::size_t cap) {
  return PosetSlice::between(inst.I(), inst.J, cap);
}

}  // namespace stanley
