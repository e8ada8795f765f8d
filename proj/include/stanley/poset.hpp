#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "stanley/instance.hpp"

namespace stanley {

/// All squarefree monomials of A \ B for squarefree ideals B inside A,
/// ordered canonically (degree, then support). Indices into `elements()`
/// are stable and sorted by degree.
class PosetSlice {
 public:
  static constexpr std::size_t kDefaultCap = std::size_t{1} << 20;

  PosetSlice() = default;
  /// Enumerates by growing each generator of `upper` one variable at a
  /// time, pruning at members of `lower` (an up-set). Throws
  /// SizeLimitExceeded above `cap` elements.
  static PosetSlice between(const MonomialIdeal& upper, const MonomialIdeal& lower,
                            std::size_t cap = kDefaultCap);

  int ambient() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<Monomial>& elements() const { return elements_; }
  const Monomial& operator[](std::size_t i) const { return elements_[i]; }

  bool contains(const Monomial& m) const { return index_.count(m.support()) != 0; }
  std::optional<std::size_t> index_of(const Monomial& m) const;

  /// Elements of degree exactly k.
  std::vector<Monomial> by_degree(int k) const;
  /// Index range [first, last) of the degree-k elements.
  std::pair<std::size_t, std::size_t> degree_range(int k) const;
  int min_degree() const;
  int max_degree() const;

  /// Elements that also lie in `ideal` (a sub-poset, still canonical).
  PosetSlice restricted_to(const MonomialIdeal& ideal) const;
  /// Elements outside `ideal`.
  PosetSlice excluding(const MonomialIdeal& ideal) const;

 private:
  static PosetSlice from_sorted(int n, std::vector<Monomial> elements);

  int n_ = 0;
  std::vector<Monomial> elements_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<std::size_t> degree_start_;  // size n+2
};

/// Poset P_{I\J} of the instance.
PosetSlice build_poset(const QuotientInstance& inst, std::size_t cap = PosetSlice::kDefaultCap);

}  // namespace stanley
