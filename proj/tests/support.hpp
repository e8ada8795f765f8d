#pragma once

// Shared fixtures and test-side oracles. Nothing here calls the solvers it
// is meant to check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "stanley/instance.hpp"
#include "stanley/poset.hpp"

namespace stanley::test {

inline QuotientInstance fixture(const std::string& name) {
  return load_instance(std::string(STANLEY_FIXTURE_DIR) + "/" + name);
}

inline Monomial mono(const char* text, int n) { return parse_monomial(text, n); }

inline std::vector<Monomial> monos(std::initializer_list<const char*> texts, int n) {
  std::vector<Monomial> out;
  for (const char* t : texts) out.push_back(parse_monomial(t, n));
  return out;
}

/// Random valid instance: r distinct degree-d generators, E of degree d+1
/// outside (F) with probability `e_prob` each, J generated by random
/// multiples of degree d+1 and d+2.
inline QuotientInstance random_instance(std::mt19937_64& rng, int n, int d, int r,
                                        double e_prob, double j_prob) {
  std::vector<std::uint64_t> deg_d, deg_d1, deg_d2;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const int k = std::popcount(s);
    if (k == d) deg_d.push_back(s);
    if (k == d + 1) deg_d1.push_back(s);
    if (k == d + 2) deg_d2.push_back(s);
  }
  std::shuffle(deg_d.begin(), deg_d.end(), rng);
  r = std::min<int>(r, static_cast<int>(deg_d.size()));
  std::vector<std::uint64_t> F(deg_d.begin(), deg_d.begin() + r);
  auto in_ideal = [](const std::vector<std::uint64_t>& gens, std::uint64_t s) {
    return std::any_of(gens.begin(), gens.end(), [&](std::uint64_t g) { return (g & ~s) == 0; });
  };
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::uint64_t> E;
  for (auto s : deg_d1) {
    if (!in_ideal(F, s) && coin(rng) < e_prob) E.push_back(s);
  }
  std::vector<std::uint64_t> gens = F;
  gens.insert(gens.end(), E.begin(), E.end());
  std::vector<std::uint64_t> J;
  for (const auto* pool : {&deg_d1, &deg_d2}) {
    for (auto s : *pool) {
      if (in_ideal(gens, s) && std::find(E.begin(), E.end(), s) == E.end() && coin(rng) < j_prob) {
        J.push_back(s);
      }
    }
  }
  auto as_monos = [n](const std::vector<std::uint64_t>& ss) {
    std::vector<Monomial> out;
    for (auto s : ss) out.emplace_back(n, s);
    return out;
  };
  return QuotientInstance::make(n, d, as_monos(F), as_monos(E), as_monos(J));
}

/// Squarefree monomials of I outside J, straight from the definition.
inline std::vector<std::uint64_t> naive_poset(const QuotientInstance& inst) {
  const auto I = inst.I();
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << inst.n); ++s) {
    const Monomial m(inst.n, s);
    if (I.contains(m) && !inst.J.contains(m)) out.push_back(s);
  }
  return out;
}

/// Is there an interval partition of `elems` with every top of degree >= k?
/// Covers the first uncovered element by every interval [m, v], any v.
inline bool oracle_partition_exists(const std::vector<std::uint64_t>& elems, int k) {
  std::vector<bool> used(elems.size(), false);
  std::function<bool()> rec = [&]() -> bool {
    std::size_t first = elems.size();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (!used[i]) {
        first = i;
        break;
      }
    }
    if (first == elems.size()) return true;
    const std::uint64_t lo = elems[first];
    for (std::size_t t = 0; t < elems.size(); ++t) {
      const std::uint64_t hi = elems[t];
      if ((lo & ~hi) != 0 || std::popcount(hi) < k) continue;
      // Every w with lo | w | hi must be present and unused.
      std::vector<std::size_t> members;
      bool ok = true;
      const std::uint64_t free = hi & ~lo;
      for (std::uint64_t sub = free;; sub = (sub - 1) & free) {
        const auto it = std::find(elems.begin(), elems.end(), lo | sub);
        if (it == elems.end() || used[it - elems.begin()]) {
          ok = false;
          break;
        }
        members.push_back(it - elems.begin());
        if (sub == 0) break;
      }
      if (!ok) continue;
      for (auto i : members) used[i] = true;
      if (rec()) return true;
      for (auto i : members) used[i] = false;
    }
    return false;
  };
  return rec();
}

inline int oracle_sdepth(const std::vector<std::uint64_t>& elems) {
  int best = 0;
  int max_deg = 0;
  for (auto s : elems) max_deg = std::max(max_deg, std::popcount(s));
  for (int k = 0; k <= max_deg; ++k) {
    if (!oracle_partition_exists(elems, k)) break;
    best = k;
  }
  return best;
}

/// Rank modulo a prime, dense rows.
inline std::size_t oracle_rank(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  auto inv = [p](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    a %= p;
    while (e > 0) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  for (auto& row : m) {
    for (auto& x : row) x = ((x % p) + p) % p;
  }
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::int64_t iv = inv(m[rank][c]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const std::int64_t f = m[i][c] * iv % p;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Large prime used as a stand-in for the rationals in the oracle: the
/// complexes here have +-1 entries and tiny size, so torsion at this prime
/// does not occur.
inline constexpr std::int64_t kOraclePrime = 2147483647;

/// Projective dimension of A/B (membership predicates on supports) from the
/// Koszul complex in every squarefree degree of the ring; -1 for zero.
inline int oracle_pd(int n, const std::function<bool(std::uint64_t)>& in_a,
                     const std::function<bool(std::uint64_t)>& in_b, std::int64_t p) {
  auto nonzero = [&](std::uint64_t s) { return in_a(s) && !in_b(s); };
  int pd = -1;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    // K_i basis: F subset of a, |F| = i, x^{a-F} nonzero in the module.
    std::vector<std::vector<std::uint64_t>> basis(n + 2);
    for (std::uint64_t f = a;; f = (f - 1) & a) {
      if (nonzero(a & ~f)) basis[std::popcount(f)].push_back(f);
      if (f == 0) break;
    }
    // d_i : K_i -> K_{i-1}, as a |K_{i-1}| x |K_i| matrix.
    std::vector<std::size_t> rk(n + 2, 0);
    for (int i = 1; i <= n; ++i) {
      if (basis[i].empty() || basis[i - 1].empty()) continue;
      std::vector<std::vector<std::int64_t>> m(basis[i - 1].size(),
                                               std::vector<std::int64_t>(basis[i].size(), 0));
      for (std::size_t c = 0; c < basis[i].size(); ++c) {
        const std::uint64_t f = basis[i][c];
        int pos = 0;
        for (int j = 0; j < n; ++j) {
          if (!((f >> j) & 1U)) continue;
          const std::uint64_t g = f & ~(std::uint64_t{1} << j);
          const auto it = std::find(basis[i - 1].begin(), basis[i - 1].end(), g);
          if (it != basis[i - 1].end()) m[it - basis[i - 1].begin()][c] = pos % 2 == 0 ? 1 : -1;
          ++pos;
        }
      }
      rk[i] = oracle_rank(std::move(m), p);
    }
    for (int i = 0; i <= n; ++i) {
      const std::size_t h = basis[i].size() - rk[i] - rk[i + 1];
      if (h != 0) pd = std::max(pd, i);
    }
  }
  return pd;
}

inline int oracle_depth_of_quotient(const QuotientInstance& inst, std::int64_t p) {
  const auto I = inst.I();
  const int pd = oracle_pd(
      inst.n, [&](std::uint64_t s) { return I.contains(Monomial(inst.n, s)); },
      [&](std::uint64_t s) { return inst.J.contains(Monomial(inst.n, s)); }, p);
  return pd < 0 ? -1 : inst.n - pd;
}

}  // namespace stanley::test
