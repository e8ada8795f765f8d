#pragma once

#include <span>
#include <vector>

#include "stanley/monomial.hpp"

namespace stanley {

/// Divisibility-minimal subset of `gens`, sorted in canonical order.
/// Duplicates collapse. An empty input gives the zero ideal's (empty) list.
std::vector<Monomial> minimal_generators(std::span<const Monomial> gens);

/// A squarefree monomial ideal given by its minimal generators.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int n = 0) : n_(n) {}
  /// Minimalizes and sorts `gens`; every generator must live in n variables.
  MonomialIdeal(int n, std::span<const Monomial> gens);

  static MonomialIdeal zero(int n) { return MonomialIdeal(n); }
  static MonomialIdeal whole_ring(int n);

  int ambient() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_whole_ring() const { return gens_.size() == 1 && gens_.front().is_unit(); }

  /// Some generator divides m.
  bool contains(const Monomial& m) const;
  /// Every generator of `other` lies in this ideal.
  bool contains(const MonomialIdeal& other) const;

  /// Union of generator supports.
  std::uint64_t support_union() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int n_;
  std::vector<Monomial> gens_;
};

inline bool ideal_membership(const Monomial& m, const MonomialIdeal& ideal) {
  return ideal.contains(m);
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
/// Generated by pairwise lcms, as for any two monomial ideals.
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);

/// "(x1, x2*x3)" or "0".
std::string to_string(const MonomialIdeal& ideal);

}  // namespace stanley
