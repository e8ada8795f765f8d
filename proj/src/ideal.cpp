#include "stanley/ideal.hpp"

#include <algorithm>

namespace stanley {

std::vector<Monomial> minimal_generators(std::span<const Monomial> gens) {
  std::vector<Monomial> sorted(gens.begin(), gens.end());
  for (const auto& g : sorted) check_same_ambient(g, sorted.front());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // Sorted by degree, so a divisor always precedes its multiples.
  std::vector<Monomial> out;
  for (const auto& g : sorted) {
    const bool absorbed =
        std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return divides(h, g); });
    if (!absorbed) out.push_back(g);
  }
  return out;
}

MonomialIdeal::MonomialIdeal(int n, std::span<const Monomial> gens) : n_(n) {
  for (const auto& g : gens) {
    if (g.ambient() != n) {
      throw AmbientMismatch("generator " + to_string(g) + " lives in " +
                            std::to_string(g.ambient()) + " variables, ideal in " +
                            std::to_string(n));
    }
  }
  gens_ = minimal_generators(gens);
}

MonomialIdeal MonomialIdeal::whole_ring(int n) {
  const Monomial one = Monomial::unit(n);
  return MonomialIdeal(n, std::span<const Monomial>(&one, 1));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.ambient() != n_) {
    throw AmbientMismatch(to_string(m) + " is not in the ambient ring of the ideal");
  }
  const std::uint64_t s = m.support();
  return std::any_of(gens_.begin(), gens_.end(),
                     [s](const Monomial& g) { return (g.support() & ~s) == 0; });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [this](const Monomial& g) { return contains(g); });
}

std::uint64_t MonomialIdeal::support_union() const {
  std::uint64_t bits = 0;
  for (const auto& g : gens_) bits |= g.support();
  return bits;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient()) throw AmbientMismatch("ideal sum across rings");
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ambient(), gens);
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient()) throw AmbientMismatch("ideal intersection across rings");
  std::vector<Monomial> gens;
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  }
  return MonomialIdeal(a.ambient(), gens);
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  return "(" + to_string(ideal.generators()) + ")";
}

}  // namespace stanley
