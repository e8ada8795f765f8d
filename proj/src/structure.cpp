#include "stanley/structure.hpp"

#include <algorithm>

namespace stanley {

bool contains_sorted(const std::vector<Monomial>& set, const Monomial& m) {
  return std::binary_search(set.begin(), set.end(), m);
}

std::vector<Monomial> b_divisors(const Monomial& c, const std::vector<Monomial>& B) {
  std::vector<Monomial> out;
  for_each_variable(c.support(), [&](int v) {
    const Monomial div(c.ambient(), c.support() & ~(std::uint64_t{1} << (v - 1)));
    if (contains_sorted(B, div)) out.push_back(div);
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Monomial> sorted_unique(std::vector<Monomial> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

StructureReport analyze(const QuotientInstance& inst) { return analyze(inst, build_poset(inst)); }

StructureReport analyze(const QuotientInstance& inst, const PosetSlice& poset) {
  StructureReport rep;
  rep.B = poset.by_degree(inst.d + 1);
  rep.C = poset.by_degree(inst.d + 2);
  rep.s = static_cast<int>(rep.B.size());
  rep.q = static_cast<int>(rep.C.size());

  std::vector<Monomial> w;
  for (std::size_t i = 0; i < inst.F.size(); ++i) {
    for (std::size_t j = i + 1; j < inst.F.size(); ++j) w.push_back(lcm(inst.F[i], inst.F[j]));
  }
  rep.W = sorted_unique(std::move(w));

  for (const auto& c : rep.C) {
    if (contains_sorted(rep.W, c)) rep.C2.push_back(c);
  }

  const MonomialIdeal f_ideal = inst.F_ideal();
  const std::vector<Monomial> E_sorted = sorted_unique(inst.E);
  for (const auto& c : rep.C) {
    if (!f_ideal.contains(c)) continue;
    bool all_in_w = true;
    for (const auto& div : b_divisors(c, rep.B)) {
      if (contains_sorted(E_sorted, div)) continue;
      if (!contains_sorted(rep.W, div)) {
        all_in_w = false;
        break;
      }
    }
    if (all_in_w) rep.C3.push_back(c);
  }
  std::vector<Monomial> c23 = rep.C2;
  c23.insert(c23.end(), rep.C3.begin(), rep.C3.end());
  rep.C23 = sorted_unique(std::move(c23));

  if (inst.r() == 4) {
    for (int i = 0; i < 4; ++i) {
      Monomial omega = Monomial::unit(inst.n);
      for (int j = 0; j < 4; ++j) {
        if (j != i) omega = lcm(omega, inst.F[j]);
      }
      rep.omegas.emplace(i + 1, omega);
    }
  }
  rep.flags = detect_hypotheses(rep, inst);
  return rep;
}

HypothesisFlags detect_hypotheses(const StructureReport& report, const QuotientInstance& inst) {
  HypothesisFlags flags;
  const int r = inst.r();
  flags.r = r;
  flags.case_r_le_4 = r <= 4;
  flags.range_ok = 2 * r <= report.s && report.s <= report.q + r;
  flags.range_ok_r4_literal = 8 <= report.s && report.s <= report.q + 4;

  if (r == 5) {
    const std::uint64_t covered = inst.F_support_union();
    const std::vector<Monomial> E_sorted = [&] {
      auto e = inst.E;
      std::sort(e.begin(), e.end());
      return e;
    }();
    for (int t = 1; t <= inst.n; ++t) {
      if ((covered >> (t - 1)) & 1U) continue;
      const bool e_inside = std::all_of(inst.E.begin(), inst.E.end(),
                                        [t](const Monomial& e) { return e.has_variable(t); });
      if (!e_inside) continue;
      const bool meets = std::any_of(report.B.begin(), report.B.end(), [&](const Monomial& b) {
        return b.has_variable(t) && !contains_sorted(E_sorted, b);
      });
      if (meets) {
        flags.case_r5_t = t;
        break;
      }
    }
  }

  if (!report.omegas.empty()) {
    const MonomialIdeal e_ideal(inst.n, inst.E);
    for (const auto& [i, omega] : report.omegas) {
      if (contains_sorted(report.C3, omega) && !contains_sorted(report.W, omega) &&
          e_ideal.contains(omega)) {
        flags.omega_obstruction.push_back(i);
      }
    }
  }
  return flags;
}

bool check_E_degree_normalized(const QuotientInstance& inst) {
  return std::all_of(inst.E.begin(), inst.E.end(),
                     [&](const Monomial& e) { return e.degree() == inst.d + 1; });
}

}  // namespace stanley
