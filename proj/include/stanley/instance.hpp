#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "stanley/ideal.hpp"

namespace stanley {

/// The quotient I/J with I minimally generated by F (degree d) and E
/// (degree >= d+1), and J inside I generated in degree >= d+1.
struct QuotientInstance {
  int n = 0;
  int d = 1;
  std::vector<Monomial> F;
  std::vector<Monomial> E;
  MonomialIdeal J;

  /// Validates every invariant and canonicalizes the generator lists.
  static QuotientInstance make(int n, int d, std::vector<Monomial> F, std::vector<Monomial> E,
                               std::vector<Monomial> J);

  int r() const { return static_cast<int>(F.size()); }
  MonomialIdeal I() const;
  /// Ideal generated by F only.
  MonomialIdeal F_ideal() const { return MonomialIdeal(n, F); }
  std::uint64_t F_support_union() const;

  friend bool operator==(const QuotientInstance&, const QuotientInstance&) = default;
};

/// Parses the `n = / d = / F: / E: / J:` text format. Lines starting with '#'
/// and unknown `key = value` lines are ignored, so campaign config files
/// can carry an instance too.
QuotientInstance parse_instance(std::string_view text);
QuotientInstance load_instance(const std::filesystem::path& path);
std::string format_instance(const QuotientInstance& inst);

}  // namespace stanley
