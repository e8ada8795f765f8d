#include "stanley/depth.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <thread>
#include <unordered_map>
#include <vector>

namespace stanley {

namespace {

bool covers_some(const std::vector<Monomial>& gens, std::uint64_t support) {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const Monomial& g) { return (g.support() & ~support) == 0; });
}

/// Membership table over every squarefree degree of the ambient ring.
std::vector<char> membership_table(const SquarefreeModuleSpec& spec) {
  const std::uint64_t total = std::uint64_t{1} << spec.ambient();
  std::vector<char> table(total, 0);
  for (std::uint64_t a = 0; a < total; ++a) table[a] = spec.nonzero_at(a) ? 1 : 0;
  return table;
}

int sign_below(std::uint64_t set, int bit) {
  const std::uint64_t below = set & ((std::uint64_t{1} << bit) - 1);
  return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

/// Homology dimensions of the Koszul complex in squarefree degree `a`,
/// indexed by homological degree.
std::vector<std::size_t> koszul_in_degree(std::uint64_t a, const std::vector<char>& member,
                                          const Field& field) {
  const int top = std::popcount(a);
  // basis[p] holds the sets F with |F| = p and x^{a\F} nonzero.
  std::vector<std::vector<std::uint64_t>> basis(top + 1);
  std::uint64_t g = a;
  while (true) {
    if (member[g]) {
      const std::uint64_t f = a & ~g;
      basis[std::popcount(f)].push_back(f);
    }
    if (g == 0) break;
    g = (g - 1) & a;
  }
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> position(top + 1);
  for (int p = 0; p <= top; ++p) {
    std::sort(basis[p].begin(), basis[p].end());
    for (std::size_t i = 0; i < basis[p].size(); ++i) position[p][basis[p][i]] = i;
  }
  // rank_of[p] = rank of the differential K_p -> K_{p-1}.
  std::vector<std::size_t> rank_of(top + 2, 0);
  for (int p = 1; p <= top; ++p) {
    if (basis[p].empty() || basis[p - 1].empty()) continue;
    IntMatrix m(basis[p - 1].size(), basis[p].size());
    for (std::size_t col = 0; col < basis[p].size(); ++col) {
      const std::uint64_t f = basis[p][col];
      std::uint64_t rest = f;
      while (rest != 0) {
        const int bit = std::countr_zero(rest);
        rest &= rest - 1;
        const auto it = position[p - 1].find(f & ~(std::uint64_t{1} << bit));
        if (it != position[p - 1].end()) m(it->second, col) = sign_below(f, bit);
      }
    }
    rank_of[p] = rank(m, field);
  }
  std::vector<std::size_t> homology(top + 1, 0);
  for (int p = 0; p <= top; ++p) {
    homology[p] = basis[p].size() - rank_of[p] - rank_of[p + 1];
  }
  return homology;
}

void finish_summary(KoszulSummary& summary, int n) {
  summary.pd = -1;
  for (const auto& [key, dim] : summary.betti) {
    if (key.first > n) throw Error("Koszul homology above the ambient dimension");
    summary.pd = std::max(summary.pd, key.first);
  }
  summary.depth = summary.pd < 0 ? kInfiniteDepth : n - summary.pd;
}

}  // namespace

SquarefreeModuleSpec::SquarefreeModuleSpec(MonomialIdeal numerator, MonomialIdeal denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (numerator_.ambient() != denominator_.ambient()) {
    throw AmbientMismatch("module numerator and denominator live in different rings");
  }
  if (!numerator_.contains(denominator_)) {
    throw InvalidInstance("denominator " + to_string(denominator_) + " is not inside numerator " +
                          to_string(numerator_));
  }
}

SquarefreeModuleSpec SquarefreeModuleSpec::quotient(const QuotientInstance& inst) {
  return {inst.I(), inst.J};
}

SquarefreeModuleSpec SquarefreeModuleSpec::ring_over_j(const QuotientInstance& inst) {
  return {MonomialIdeal::whole_ring(inst.n), inst.J};
}

SquarefreeModuleSpec SquarefreeModuleSpec::ring_over_i(const QuotientInstance& inst) {
  return {MonomialIdeal::whole_ring(inst.n), inst.I()};
}

bool SquarefreeModuleSpec::nonzero_at(std::uint64_t support) const {
  return covers_some(numerator_.generators(), support) &&
         !covers_some(denominator_.generators(), support);
}

Field default_field() {
  if (const char* env = std::getenv("STANLEY_FIELD"); env != nullptr && *env != '\0') {
    return parse_field(env);
  }
  return Field::gf2();
}

KoszulSummary koszul_homology(const SquarefreeModuleSpec& spec, const Field& field,
                              const KoszulOptions& options) {
  const int n = spec.ambient();
  if (n > options.max_variables) {
    throw SizeLimitExceeded("Koszul homology refuses n = " + std::to_string(n) + " (bound " +
                            std::to_string(options.max_variables) + ")");
  }
  const std::vector<char> member = membership_table(spec);

  // Multigraded Betti numbers of A/B sit in lcms of generators of A and B.
  const std::uint64_t universe =
      spec.numerator().support_union() | spec.denominator().support_union();
  std::vector<std::uint64_t> degrees;
  std::uint64_t a = universe;
  while (true) {
    degrees.push_back(a);
    if (a == 0) break;
    a = (a - 1) & universe;
  }
  std::sort(degrees.begin(), degrees.end());

  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(degrees.size())));

  using Betti = std::map<std::pair<int, std::uint64_t>, std::size_t>;
  std::vector<Betti> partial(threads);
  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < degrees.size(); i += threads) {
      const auto homology = koszul_in_degree(degrees[i], member, field);
      for (std::size_t p = 0; p < homology.size(); ++p) {
        if (homology[p] != 0) partial[worker][{static_cast<int>(p), degrees[i]}] = homology[p];
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  KoszulSummary summary;
  summary.field = field;
  for (auto& part : partial) summary.betti.merge(part);
  finish_summary(summary, n);
  return summary;
}

int depth(const SquarefreeModuleSpec& spec, const Field& field, const KoszulOptions& options) {
  return koszul_homology(spec, field, options).depth;
}

namespace {

/// Mapping cone of the Taylor-resolution lift of B -> A. Coefficients are
/// integers; the monomial factor of an entry is implicit in the degrees.
class TaylorCone {
 public:
  struct Cell {
    bool from_b;          // R(B) summand, shifted up by one
    std::uint64_t subset; // generators used, as a bit set
    int index;            // homological index in the cone
    std::uint64_t degree; // lcm of the generators
  };
  struct Entry {
    std::size_t target;
    int coefficient;
  };

  TaylorCone(const SquarefreeModuleSpec& spec, std::size_t max_generators) {
    for (const auto& g : spec.numerator().generators()) a_.push_back(g.support());
    for (const auto& g : spec.denominator().generators()) b_.push_back(g.support());
    if (a_.size() + b_.size() > max_generators) {
      throw SizeLimitExceeded("Taylor oracle refuses " + std::to_string(a_.size() + b_.size()) +
                              " generators (bound " + std::to_string(max_generators) + ")");
    }
    for (std::uint64_t b : b_) {
      std::size_t k = 0;
      while (k < a_.size() && (a_[k] & ~b) != 0) ++k;
      if (k == a_.size()) throw InvalidInstance("a generator of B lies outside A");
      lift_.push_back(k);
    }
    add_cells(false, a_.size());
    add_cells(true, b_.size());
    build_differential();
  }

  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<std::vector<Entry>>& differential() const { return diff_; }

  bool squares_to_zero() const {
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      std::unordered_map<std::size_t, long long> sum;
      for (const auto& e1 : diff_[c]) {
        for (const auto& e2 : diff_[e1.target]) {
          sum[e2.target] += static_cast<long long>(e1.coefficient) * e2.coefficient;
        }
      }
      for (const auto& [t, v] : sum) {
        if (v != 0) return false;
      }
    }
    return true;
  }

  /// d_A(phi(y)) == phi(d_B(y)) for every basis element y of R(B).
  bool lift_is_chain_map() const {
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      if (!cells_[c].from_b) continue;
      std::unordered_map<std::size_t, long long> lhs, rhs;
      for (const auto& e : diff_[c]) {
        if (!cells_[e.target].from_b) {
          for (const auto& e2 : diff_[e.target]) lhs[e2.target] += e.coefficient * e2.coefficient;
        } else {
          // -d_B y, so negate back before applying phi.
          for (const auto& e2 : diff_[e.target]) {
            if (!cells_[e2.target].from_b) rhs[e2.target] += -e.coefficient * e2.coefficient;
          }
        }
      }
      for (auto& [t, v] : rhs) lhs[t] -= v;
      for (const auto& [t, v] : lhs) {
        if (v != 0) return false;
      }
    }
    return true;
  }

 private:
  static std::uint64_t lcm_of(const std::vector<std::uint64_t>& gens, std::uint64_t subset) {
    std::uint64_t out = 0;
    for_each_variable(subset, [&](int i) { out |= gens[i - 1]; });
    return out;
  }

  static std::uint64_t key(bool from_b, std::uint64_t subset) {
    return (subset << 1) | (from_b ? 1U : 0U);
  }

  void add_cells(bool from_b, std::size_t count) {
    const auto& gens = from_b ? b_ : a_;
    const std::uint64_t total = std::uint64_t{1} << count;
    for (std::uint64_t s = 1; s < total; ++s) {
      const int size = std::popcount(s);
      lookup_[key(from_b, s)] = cells_.size();
      cells_.push_back({from_b, s, from_b ? size : size - 1, lcm_of(gens, s)});
    }
  }

  void build_differential() {
    diff_.assign(cells_.size(), {});
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      const Cell& cell = cells_[c];
      // Taylor boundary inside the summand (negated on the shifted R(B)).
      if (std::popcount(cell.subset) >= 2) {
        int k = 0;
        for_each_variable(cell.subset, [&](int i) {
          const std::uint64_t face = cell.subset & ~(std::uint64_t{1} << (i - 1));
          const int sign = (k % 2 == 0) ? 1 : -1;
          diff_[c].push_back({lookup_.at(key(cell.from_b, face)), cell.from_b ? -sign : sign});
          ++k;
        });
      }
      if (cell.from_b) add_lift(c);
    }
  }

  void add_lift(std::size_t c) {
    const Cell& cell = cells_[c];
    std::vector<std::size_t> images;
    for_each_variable(cell.subset, [&](int i) { images.push_back(lift_[i - 1]); });
    std::uint64_t target = 0;
    for (std::size_t k : images) target |= std::uint64_t{1} << k;
    if (static_cast<std::size_t>(std::popcount(target)) != images.size()) return;
    int inversions = 0;
    for (std::size_t x = 0; x < images.size(); ++x) {
      for (std::size_t y = x + 1; y < images.size(); ++y) {
        if (images[x] > images[y]) ++inversions;
      }
    }
    diff_[c].push_back({lookup_.at(key(false, target)), inversions % 2 == 0 ? 1 : -1});
  }

  std::vector<std::uint64_t> a_, b_;
  std::vector<std::size_t> lift_;
  std::vector<Cell> cells_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
  std::vector<std::vector<Entry>> diff_;
};

}  // namespace

int taylor_depth_oracle(const SquarefreeModuleSpec& spec, const Field& field,
                        std::size_t max_generators) {
  const TaylorCone cone(spec, max_generators);
  const auto& cells = cone.cells();

  // After tensoring with K only entries between cells of equal degree
  // survive, so the complex splits by degree.
  std::map<std::uint64_t, std::vector<std::size_t>> by_degree;
  for (std::size_t c = 0; c < cells.size(); ++c) by_degree[cells[c].degree].push_back(c);

  int pd = -1;
  for (const auto& [deg, members] : by_degree) {
    int top = 0;
    for (std::size_t c : members) top = std::max(top, cells[c].index);
    std::vector<std::vector<std::size_t>> basis(top + 1);
    std::unordered_map<std::size_t, std::size_t> position;
    for (std::size_t c : members) {
      position[c] = basis[cells[c].index].size();
      basis[cells[c].index].push_back(c);
    }
    std::vector<std::size_t> rank_of(top + 2, 0);
    for (int i = 1; i <= top; ++i) {
      if (basis[i].empty() || basis[i - 1].empty()) continue;
      IntMatrix m(basis[i - 1].size(), basis[i].size());
      for (std::size_t col = 0; col < basis[i].size(); ++col) {
        for (const auto& e : cone.differential()[basis[i][col]]) {
          if (cells[e.target].degree == deg) m(position.at(e.target), col) += e.coefficient;
        }
      }
      rank_of[i] = rank(m, field);
    }
    for (int i = 0; i <= top; ++i) {
      if (basis[i].size() > rank_of[i] + rank_of[i + 1]) pd = std::max(pd, i);
    }
  }
  return pd < 0 ? kInfiniteDepth : spec.ambient() - pd;
}

bool taylor_cone_is_complex(const SquarefreeModuleSpec& spec, std::size_t max_generators) {
  const TaylorCone cone(spec, max_generators);
  return cone.squares_to_zero() && cone.lift_is_chain_map();
}

bool depth_lemma_inequalities(int depth_a, int depth_b, int depth_c) {
  auto widen = [](int d) { return d == kInfiniteDepth ? 1'000'000'000LL : static_cast<long long>(d); };
  const long long a = widen(depth_a), b = widen(depth_b), c = widen(depth_c);
  return b >= std::min(a, c) && a >= std::min(b, c + 1) && c >= std::min(a - 1, b);
}

DepthLemmaCheck verify_depth_lemma(const SquarefreeModuleSpec& a, const SquarefreeModuleSpec& b,
                                   const SquarefreeModuleSpec& c, const Field& field) {
  const int n = b.ambient();
  if (a.ambient() != n || c.ambient() != n) {
    throw AmbientMismatch("short exact triple mixes rings");
  }
  if (n > 20) throw SizeLimitExceeded("exactness check refuses n = " + std::to_string(n));
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t deg = 0; deg < total; ++deg) {
    const int da = a.nonzero_at(deg), db = b.nonzero_at(deg), dc = c.nonzero_at(deg);
    if (db != da + dc) {
      throw PreconditionError("triple is not exact in degree " + to_string(Monomial(n, deg)));
    }
    if (!da) continue;
    for (int j = 0; j < n; ++j) {
      const std::uint64_t up = deg | (std::uint64_t{1} << j);
      if (up != deg && b.nonzero_at(up) && !a.nonzero_at(up)) {
        throw PreconditionError("first module is not a submodule: " +
                                to_string(Monomial(n, deg)) + " times x" + std::to_string(j + 1) +
                                " leaves it");
      }
    }
  }
  DepthLemmaCheck check;
  check.depth_a = depth(a, field);
  check.depth_b = depth(b, field);
  check.depth_c = depth(c, field);
  check.holds = depth_lemma_inequalities(check.depth_a, check.depth_b, check.depth_c);
  return check;
}

FieldCrossCheck cross_check_fields(const SquarefreeModuleSpec& spec, const KoszulOptions& options) {
  return {depth(spec, Field::gf2(), options), depth(spec, Field::rationals(), options)};
}

}  // namespace stanley
