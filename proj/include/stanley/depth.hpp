#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <utility>

#include "stanley/instance.hpp"
#include "stanley/linalg.hpp"

namespace stanley {

/// Depth of the zero module.
inline constexpr int kInfiniteDepth = std::numeric_limits<int>::max();

/// The squarefree module A/B with B inside A. Its component in squarefree
/// degree a is K when x^a lies in A but not in B, and 0 otherwise.
class SquarefreeModuleSpec {
 public:
  SquarefreeModuleSpec(MonomialIdeal numerator, MonomialIdeal denominator);

  /// I/J, S/J and S/I of an instance.
  static SquarefreeModuleSpec quotient(const QuotientInstance& inst);
  static SquarefreeModuleSpec ring_over_j(const QuotientInstance& inst);
  static SquarefreeModuleSpec ring_over_i(const QuotientInstance& inst);

  int ambient() const { return numerator_.ambient(); }
  const MonomialIdeal& numerator() const { return numerator_; }
  const MonomialIdeal& denominator() const { return denominator_; }

  /// Component dimension (0 or 1) in squarefree degree `support`.
  bool nonzero_at(std::uint64_t support) const;

 private:
  MonomialIdeal numerator_;
  MonomialIdeal denominator_;
};

struct KoszulOptions {
  int max_variables = 16;
  /// Worker threads over multidegrees; 0 picks the hardware count.
  unsigned threads = 1;
};

struct KoszulSummary {
  Field field;
  /// (i, squarefree degree) -> dim of the degree-a part of H_i. Only
  /// nonzero entries are stored.
  std::map<std::pair<int, std::uint64_t>, std::size_t> betti;
  int pd = -1;                  ///< -1 for the zero module
  int depth = kInfiniteDepth;   ///< n - pd
  bool zero_module() const { return pd < 0; }
};

/// Field from the STANLEY_FIELD environment variable, GF(2) when unset.
Field default_field();

KoszulSummary koszul_homology(const SquarefreeModuleSpec& spec, const Field& field,
                              const KoszulOptions& options = {});

int depth(const SquarefreeModuleSpec& spec, const Field& field, const KoszulOptions& options = {});

/// Independent depth computation from the mapping cone of Taylor
/// resolutions of B -> A. Refuses more than `max_generators` generators.
int taylor_depth_oracle(const SquarefreeModuleSpec& spec, const Field& field,
                        std::size_t max_generators = 20);

/// Self-check of the oracle's complex over the integers: the cone
/// differential squares to zero and the lift of B -> A is a chain map.
bool taylor_cone_is_complex(const SquarefreeModuleSpec& spec, std::size_t max_generators = 14);

struct DepthLemmaCheck {
  int depth_a = 0;
  int depth_b = 0;
  int depth_c = 0;
  bool holds = false;
  explicit operator bool() const { return holds; }
};

/// For 0 -> a -> b -> c -> 0, checks the three depth inequalities. Throws
/// PreconditionError naming a degree where the triple is not exact.
DepthLemmaCheck verify_depth_lemma(const SquarefreeModuleSpec& a, const SquarefreeModuleSpec& b,
                                   const SquarefreeModuleSpec& c, const Field& field);

/// The three inequalities alone, with kInfiniteDepth for zero modules.
bool depth_lemma_inequalities(int depth_a, int depth_b, int depth_c);

struct FieldCrossCheck {
  int depth_gf2 = 0;
  int depth_rationals = 0;
  bool agree() const { return depth_gf2 == depth_rationals; }
};

FieldCrossCheck cross_check_fields(const SquarefreeModuleSpec& spec,
                                   const KoszulOptions& options = {});

}  // namespace stanley
