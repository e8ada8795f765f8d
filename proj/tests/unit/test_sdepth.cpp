#include <doctest.h>

#include <random>

#include "../support.hpp"
#include "stanley/sdepth.hpp"

using namespace stanley;
using stanley::test::fixture;
using stanley::test::mono;

namespace {

IntervalPartition singletons(const PosetSlice& poset) {
  std::vector<Interval> ivs;
  for (const auto& m : poset.elements()) ivs.push_back({m, m});
  return IntervalPartition(ivs);
}

void check_witness(const PosetSlice& poset, const IntervalPartition& w, int k) {
  const auto v = validate_partition(poset, w);
  CHECK_MESSAGE(v.ok(), v.message);
  CHECK(w.sdepth_value() >= k);
}

}  // namespace

TEST_CASE("validate_partition names the failed condition") {
  const auto inst = fixture("five_cubics.txt");
  const auto poset = build_poset(inst);
  const int n = 5;

  const auto trivial = singletons(poset);
  CHECK(validate_partition(poset, trivial).ok());
  CHECK(trivial.sdepth_value() == inst.d);

  auto ivs = trivial.intervals();
  ivs.push_back({mono("x1", n), mono("x1*x2", n)});
  auto res = validate_partition(poset, IntervalPartition(ivs));
  CHECK(res.kind == Violation::Overlap);
  REQUIRE(res.witness.has_value());

  ivs = trivial.intervals();
  ivs.erase(ivs.begin());
  res = validate_partition(poset, IntervalPartition(ivs));
  CHECK(res.kind == Violation::Uncovered);
  CHECK(*res.witness == poset[0]);

  ivs = trivial.intervals();
  ivs.push_back({mono("x1*x2", n), mono("x1", n)});
  CHECK(validate_partition(poset, IntervalPartition(ivs)).kind == Violation::NotAnInterval);

  // A top outside the poset (x1*x3*x4 lies in J).
  ivs = {{mono("x1", n), mono("x1*x3*x4", n)}};
  CHECK(validate_partition(poset, IntervalPartition(ivs)).kind == Violation::NotAnInterval);
  CHECK_THROWS(IntervalPartition().sdepth_value());
}

TEST_CASE("five-cubic quotient has sdepth 3") {
  const auto poset = build_poset(fixture("five_cubics.txt"));
  CHECK(poset.size() == 20);
  const auto w3 = sdepth_decision(poset, 3);
  REQUIRE(w3.has_value());
  check_witness(poset, *w3, 3);
  CHECK_FALSE(sdepth_decision(poset, 4).has_value());
  const auto res = sdepth(poset);
  CHECK(res.value == 3);
  check_witness(poset, res.witness, 3);
  CHECK(stanley::test::oracle_sdepth(stanley::test::naive_poset(fixture("five_cubics.txt"))) == 3);
}

TEST_CASE("eight-variable r = 5 instance has sdepth 2") {
  const auto poset = build_poset(fixture("r5_eight_vars.txt"));
  CHECK_FALSE(sdepth_decision(poset, 3).has_value());
  SdepthOptions untrimmed;
  untrimmed.trim = false;
  CHECK_FALSE(sdepth_decision(poset, 3, untrimmed).has_value());
  CHECK(sdepth(poset).value == 2);
}

TEST_CASE("four generators over cubic J: sdepth 2, confirmed by the test oracle") {
  const auto inst = fixture("four_vars_cubic_j.txt");
  const auto elems = stanley::test::naive_poset(inst);
  CHECK(stanley::test::oracle_sdepth(elems) == 2);
  CHECK(sdepth(inst).value == 2);
}

TEST_CASE("trivial cases") {
  SUBCASE("single variable") {
    const auto inst = QuotientInstance::make(1, 1, {mono("x1", 1)}, {}, {});
    CHECK(sdepth(inst).value == 1);
    CHECK(brute_force_sdepth(build_poset(inst)) == 1);
  }
  SUBCASE("single element poset has the degree of its element") {
    const int n = 3;
    const auto inst = QuotientInstance::make(n, 2, {mono("x1*x2", n)}, {}, {mono("x1*x2*x3", n)});
    const auto poset = build_poset(inst);
    REQUIRE(poset.size() == 1);
    CHECK(brute_force_sdepth(poset) == 2);
    CHECK(sdepth(poset).value == 2);
  }
  SUBCASE("k = d always succeeds") {
    const auto poset = build_poset(fixture("seven_vars_a.txt"));
    const auto w = sdepth_decision(poset, 1);
    REQUIRE(w.has_value());
    check_witness(poset, *w, 1);
  }
}

TEST_CASE("brute force refuses large posets") {
  const auto poset = build_poset(fixture("five_cubics.txt"));
  CHECK_THROWS_AS(brute_force_sdepth(poset), SizeLimitExceeded);
  CHECK(brute_force_sdepth(poset, 20) == 3);
}

TEST_CASE("search variants agree with both oracles on small posets") {
  std::mt19937_64 rng(2024);
  int compared = 0;
  for (int trial = 0; compared < 250 && trial < 5000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int d = 1 + static_cast<int>(rng() % 2);
    const auto inst = stanley::test::random_instance(rng, n, d, 1 + rng() % 4, 0.3, 0.35);
    const auto poset = build_poset(inst);
    if (poset.size() > 14) continue;
    ++compared;
    CAPTURE(format_instance(inst));
    const int brute = brute_force_sdepth(poset);
    CHECK(stanley::test::oracle_sdepth(stanley::test::naive_poset(inst)) == brute);

    for (bool trim : {true, false}) {
      for (Branching br : {Branching::FailFast, Branching::Canonical}) {
        SdepthOptions opt;
        opt.trim = trim;
        opt.branching = br;
        const auto res = sdepth(poset, opt);
        CHECK(res.value == brute);
        check_witness(poset, res.witness, res.value);
      }
    }
    CHECK(brute >= d);
    CHECK(brute <= n);
    // Decisions are monotone in k.
    bool seen_fail = false;
    for (int k = d; k <= n; ++k) {
      const bool ok = sdepth_decision(poset, k).has_value();
      if (seen_fail) CHECK_FALSE(ok);
      seen_fail = seen_fail || !ok;
    }
  }
  CHECK(compared >= 200);
}

TEST_CASE("decisions on larger posets match the untrimmed search") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = stanley::test::random_instance(rng, 6, 1, 2 + rng() % 4, 0.3, 0.3);
    const auto poset = build_poset(inst);
    SdepthOptions untrimmed;
    untrimmed.trim = false;
    const auto a = sdepth(poset);
    const auto b = sdepth(poset, untrimmed);
    CAPTURE(format_instance(inst));
    CHECK(a.value == b.value);
    check_witness(poset, a.witness, a.value);
  }
}

TEST_CASE("canonical branching is deterministic") {
  const auto poset = build_poset(fixture("seven_vars_a.txt"));
  SdepthOptions opt;
  opt.branching = Branching::Canonical;
  const auto a = sdepth_decision(poset, 3, opt);
  const auto b = sdepth_decision(poset, 3, opt);
  REQUIRE(a.has_value());
  CHECK(*a == *b);
}

TEST_CASE("complete_with_singletons fills the gaps above a degree") {
  const auto poset = build_poset(fixture("five_cubics.txt"));
  const int n = 5;
  const auto p = complete_with_singletons(poset, {{mono("x1", n), mono("x1*x2*x3", n)}}, 1);
  CHECK(validate_partition(poset, p).ok());
  CHECK(interval_elements(poset, {mono("x1", n), mono("x1*x2*x3", n)}).size() == 4);
}
