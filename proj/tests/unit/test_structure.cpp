#include <doctest.h>

#include <random>
#include <set>

#include "../support.hpp"
#include "stanley/structure.hpp"

using namespace stanley;
using stanley::test::fixture;
using stanley::test::mono;
using stanley::test::monos;

TEST_CASE("counts s and q of the fixtures") {
  struct Row {
    const char* file;
    int s, q;
  };
  for (const Row& row : {Row{"seven_vars_a.txt", 16, 12}, Row{"seven_vars_b.txt", 12, 8},
                         Row{"r5_eight_vars.txt", 16, 15}}) {
    CAPTURE(row.file);
    const auto rep = analyze(fixture(row.file));
    CHECK(rep.s == row.s);
    CHECK(rep.q == row.q);
    CHECK(rep.flags.range_ok);
  }
}

TEST_CASE("eight-variable r = 5 instance has t = 7") {
  const auto inst = fixture("r5_eight_vars.txt");
  const auto rep = analyze(inst);
  REQUIRE(rep.flags.case_r5_t.has_value());
  CHECK(*rep.flags.case_r5_t == 7);
  CHECK_FALSE(rep.flags.case_r_le_4);
  CHECK(check_E_degree_normalized(inst));
  CHECK(contains_sorted(rep.B, mono("x1*x7", 8)));
}

TEST_CASE("five-cubic quotient: B = W and no free variable") {
  const auto rep = analyze(fixture("five_cubics.txt"));
  CHECK(rep.B == rep.W);
  CHECK(rep.W.size() == 10);
  CHECK_FALSE(rep.flags.case_r5_t.has_value());
  CHECK(rep.omegas.empty());
}

TEST_CASE("four-cycle of quadrics: two lcms coincide and C2 meets C3") {
  const int n = 4;
  const auto inst = QuotientInstance::make(n, 2, monos({"x1*x2", "x2*x3", "x3*x4", "x1*x4"}, n), {}, {});
  const auto rep = analyze(inst);
  const auto m = mono("x1*x2*x3*x4", n);
  CHECK(rep.W.size() == 5);
  CHECK(contains_sorted(rep.C2, m));
  CHECK(contains_sorted(rep.C3, m));
  CHECK(rep.C23 == std::vector<Monomial>{m});
  CHECK(rep.flags.case_r_le_4);
  REQUIRE(rep.omegas.size() == 4);
  CHECK(rep.omegas.at(1) == m);
}

TEST_CASE("E degree normalization") {
  const int n = 5;
  CHECK(check_E_degree_normalized(QuotientInstance::make(n, 1, monos({"x1"}, n), {}, {})));
  CHECK_FALSE(check_E_degree_normalized(
      QuotientInstance::make(n, 1, monos({"x1"}, n), monos({"x2*x3*x4"}, n), {})));
  CHECK(check_E_degree_normalized(
      QuotientInstance::make(n, 1, monos({"x1"}, n), monos({"x2*x3"}, n), {})));
}

TEST_CASE("small r sets case_r_le_4") {
  const int n = 5;
  const auto rep = analyze(QuotientInstance::make(n, 1, monos({"x1", "x2", "x3"}, n), {}, {}));
  CHECK(rep.flags.r == 3);
  CHECK(rep.flags.case_r_le_4);
  CHECK_FALSE(rep.flags.case_r5_t.has_value());
}

TEST_CASE("report sets agree with their definitions on random instances") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const int d = 1 + static_cast<int>(rng() % 2);
    const int r = 1 + static_cast<int>(rng() % 5);
    const auto inst = stanley::test::random_instance(rng, n, d, r, 0.3, 0.25);
    const auto rep = analyze(inst);
    CAPTURE(format_instance(inst));
    const auto elems = stanley::test::naive_poset(inst);
    std::set<Monomial> B, C;
    for (auto s : elems) {
      if (std::popcount(s) == d + 1) B.emplace(n, s);
      if (std::popcount(s) == d + 2) C.emplace(n, s);
    }
    CHECK(std::set<Monomial>(rep.B.begin(), rep.B.end()) == B);
    CHECK(std::set<Monomial>(rep.C.begin(), rep.C.end()) == C);

    std::set<Monomial> W;
    for (int i = 0; i < inst.r(); ++i) {
      for (int j = i + 1; j < inst.r(); ++j) W.insert(lcm(inst.F[i], inst.F[j]));
    }
    CHECK(std::set<Monomial>(rep.W.begin(), rep.W.end()) == W);
    CHECK(rep.W.size() <= static_cast<std::size_t>(inst.r() * (inst.r() - 1) / 2));

    for (const auto& c : rep.C2) CHECK(W.count(c) == 1);
    for (const auto& c : C) {
      if (W.count(c)) CHECK(contains_sorted(rep.C2, c));
    }
    const MonomialIdeal fi = inst.F_ideal();
    for (const auto& c : C) {
      bool want = fi.contains(c);
      for_each_variable(c.support(), [&](int v) {
        const Monomial div(n, c.support() & ~(std::uint64_t{1} << (v - 1)));
        const bool in_e = std::find(inst.E.begin(), inst.E.end(), div) != inst.E.end();
        if (B.count(div) && !in_e && !W.count(div)) want = false;
      });
      CHECK(contains_sorted(rep.C3, c) == want);
    }
    for (const auto& c : rep.C23) {
      CHECK((contains_sorted(rep.C2, c) || contains_sorted(rep.C3, c)));
    }
    CHECK(rep.C23.size() <= rep.C2.size() + rep.C3.size());

    // omega obstruction agrees with the three memberships.
    const MonomialIdeal ei(n, inst.E);
    for (const auto& [i, omega] : rep.omegas) {
      const bool want_obs = contains_sorted(rep.C3, omega) && !W.count(omega) && ei.contains(omega);
      const bool got = std::find(rep.flags.omega_obstruction.begin(),
                                 rep.flags.omega_obstruction.end(), i) != rep.flags.omega_obstruction.end();
      CHECK(got == want_obs);
    }
  }
}

TEST_CASE("b_divisors lists the degree d+1 divisors inside B") {
  const auto inst = fixture("five_cubics.txt");
  const auto rep = analyze(inst);
  const auto divs = b_divisors(mono("x1*x2*x3", 5), rep.B);
  CHECK(to_string(divs) == to_string(monos({"x1*x2", "x1*x3", "x2*x3"}, 5)));
}
