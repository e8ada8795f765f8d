#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "stanley/errors.hpp"

namespace stanley {

/// A squarefree monomial in K[x_1..x_n], stored as its support bit set.
/// Bit i stands for the variable x_{i+1}.
class Monomial {
 public:
  static constexpr int kMaxVariables = 64;

  Monomial() = default;
  Monomial(int n, std::uint64_t support);

  static Monomial unit(int n) { return Monomial(n, 0); }
  /// x_{index}, with `index` 1-based as in the text format.
  static Monomial variable(int n, int index);
  static Monomial from_indices(int n, const std::vector<int>& one_based);

  int ambient() const { return n_; }
  std::uint64_t support() const { return bits_; }
  int degree() const { return std::popcount(bits_); }
  bool is_unit() const { return bits_ == 0; }
  /// True iff x_{index} (1-based) divides this monomial.
  bool has_variable(int index) const { return (bits_ >> (index - 1)) & 1U; }
  std::vector<int> variables() const;

  /// Canonical order: degree first, then support as a little-endian integer.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
    return a.n_ <=> b.n_;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::uint64_t bits_ = 0;
  int n_ = 0;
};

void check_same_ambient(const Monomial& a, const Monomial& b);

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  return Monomial(a.ambient(), a.support() | b.support());
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  return Monomial(a.ambient(), a.support() & b.support());
}

/// a | b.
inline bool divides(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  return (a.support() & ~b.support()) == 0;
}

/// b / a; requires a | b.
Monomial quotient(const Monomial& b, const Monomial& a);

/// "x1*x3", or "1" for the unit.
std::string to_string(const Monomial& m);
/// Parses "x1*x3" (whitespace tolerant) in n variables; "1" is the unit.
Monomial parse_monomial(std::string_view text, int n);

std::string to_string(const std::vector<Monomial>& ms);

/// Calls `fn(var)` for each 1-based variable index in `support`.
template <class Fn>
void for_each_variable(std::uint64_t support, Fn&& fn) {
  while (support != 0) {
    const int bit = std::countr_zero(support);
    fn(bit + 1);
    support &= support - 1;
  }
}

}  // namespace stanley

template <>
struct std::hash<stanley::Monomial> {
  std::size_t operator()(const stanley::Monomial& m) const noexcept {
    return std::hash<std::uint64_t>{}(m.support() * 0x9E3779B97F4A7C15ULL ^
                                      static_cast<std::uint64_t>(m.ambient()));
  }
};
