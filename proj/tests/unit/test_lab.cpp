#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "../support.hpp"
#include "stanley/lab.hpp"
#include "stanley/report.hpp"

using namespace stanley;
using stanley::test::fixture;
using stanley::test::monos;

namespace {

QuotientInstance permuted(const QuotientInstance& inst, const std::vector<int>& perm) {
  auto map = [&](const std::vector<Monomial>& list) {
    std::vector<Monomial> out;
    for (const auto& m : list) {
      std::uint64_t s = 0;
      for_each_variable(m.support(), [&](int v) { s |= std::uint64_t{1} << perm[v - 1]; });
      out.emplace_back(inst.n, s);
    }
    return out;
  };
  return QuotientInstance::make(inst.n, inst.d, map(inst.F), map(inst.E), map(inst.J.generators()));
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("stanley-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("config parsing") {
  const auto c = parse_campaign_config(
      "# sweep\nmode = exhaustive\nn = 2..4\nd = 1\nr = 1..3\ne_policy = degree_d1\n"
      "field = q\ncount = 10\nout = /tmp/x\ncross_check_every = 5\n");
  CHECK(c.mode == EnumerationMode::Exhaustive);
  CHECK(c.n_min == 2);
  CHECK(c.n_max == 4);
  CHECK(c.r_max == 3);
  CHECK(c.e_policy == EPolicy::DegreeD1);
  CHECK(*c.field == Field::rationals());
  CHECK(c.instance_cap == 10);
  CHECK(c.output == "/tmp/x");
  CHECK(c.cross_check_every == 5);
  CHECK_FALSE(c.instance.has_value());
}

TEST_CASE("config with an instance is a single-instance campaign") {
  const auto c = parse_campaign_config("n = 5\nd = 1\nF: x1, x2\nJ: x1*x2\nlemma_dep = true\n");
  CHECK(c.mode == EnumerationMode::Single);
  REQUIRE(c.instance.has_value());
  CHECK(c.instance->r() == 2);
  CHECK(c.lemma_dep);
  CHECK(generate_instances(c).size() == 1);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_campaign_config("colour = blue\n"), ConfigError);
  CHECK_THROWS_AS(parse_campaign_config("n = five\n"), ConfigError);
  CHECK_THROWS_AS(parse_campaign_config("mode = exhaustive\nn = 1..7\n"), ConfigError);
  CHECK_THROWS_AS(parse_campaign_config("mode = random\nn = 3\nr = 4\ncount = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_campaign_config("j_density = 1.5\n"), ConfigError);
  CHECK_THROWS_AS(parse_campaign_config("require_t_hypothesis = true\nr = 4\n"), ConfigError);
  CHECK_THROWS_AS(parse_campaign_config("mode = single\n"), ConfigError);
  CHECK_THROWS_AS(parse_campaign_config("field = reals\n"), ConfigError);
  CHECK_THROWS_AS(parse_campaign_config("e_policy = most\n"), ConfigError);
  CHECK_NOTHROW(parse_campaign_config("mode = exhaustive\nn = 1..7\nexhaustive_bound = 7\n"));
}

TEST_CASE("empty range gives an empty campaign with exit code 0") {
  CampaignConfig c;
  c.n_min = 4;
  c.n_max = 3;
  CHECK(generate_instances(c).empty());
  const auto summary = run_campaign(c, 1, false);
  CHECK(summary.total == 0);
  CHECK(summary.exit_code() == 0);
}

TEST_CASE("canonical form is invariant under variable permutations") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto inst = stanley::test::random_instance(rng, n, 1 + rng() % 2, 1 + rng() % 4, 0.3, 0.3);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto a = canonical_form(inst);
    const auto b = canonical_form(permuted(inst, perm));
    CAPTURE(format_instance(inst));
    CHECK(a.exact);
    CHECK(a == b);
    CHECK(a.instance == b.instance);
    CHECK(canonical_form(a.instance) == a);
  }
  // Different instances keep different forms.
  const int n = 4;
  const auto x = QuotientInstance::make(n, 1, monos({"x1", "x2"}, n), {}, {});
  const auto y = QuotientInstance::make(n, 1, monos({"x1", "x2"}, n), {}, monos({"x1*x2"}, n));
  CHECK_FALSE(canonical_form(x) == canonical_form(y));
}

TEST_CASE("exhaustive generation covers the known instances") {
  SUBCASE("five variables, five generators, E empty") {
    CampaignConfig c;
    c.n_min = c.n_max = 5;
    c.r_min = c.r_max = 5;
    const auto all = generate_instances(c);
    const auto want = canonical_form(fixture("five_cubics.txt"));
    bool found = false;
    std::set<std::vector<std::uint64_t>> keys;
    for (const auto& inst : all) {
      const auto form = canonical_form(inst);
      found = found || form == want;
      keys.insert(form.key);
    }
    CHECK(found);
    CHECK(keys.size() == all.size());
  }
  SUBCASE("the four-cycle of quadrics with J = 0") {
    CampaignConfig c;
    c.n_min = c.n_max = 4;
    c.d = 2;
    c.r_min = c.r_max = 4;
    const int n = 4;
    const auto cycle = canonical_form(
        QuotientInstance::make(n, 2, monos({"x1*x2", "x2*x3", "x3*x4", "x1*x4"}, n), {}, {}));
    bool found = false;
    for (const auto& inst : generate_instances(c)) found = found || canonical_form(inst) == cycle;
    CHECK(found);
  }
  SUBCASE("every instance is valid and normalized") {
    CampaignConfig c;
    c.n_max = 4;
    c.e_policy = EPolicy::DegreeD1;
    const auto all = generate_instances(c);
    CHECK(all.size() > 100);
    for (const auto& inst : all) {
      CHECK(check_E_degree_normalized(inst));
      CHECK(inst.r() <= 4);
      CHECK(QuotientInstance::make(inst.n, inst.d, inst.F, inst.E, inst.J.generators()) == inst);
    }
  }
}

TEST_CASE("random generation is reproducible and honours the hypotheses") {
  CampaignConfig c;
  c.mode = EnumerationMode::Random;
  c.n_min = 6;
  c.n_max = 8;
  c.r_min = c.r_max = 5;
  c.e_policy = EPolicy::InsideXt;
  c.require_t_hypothesis = true;
  c.instance_cap = 40;
  c.seed = 77;
  const auto a = generate_instances(c);
  const auto b = generate_instances(c);
  CHECK(a == b);
  REQUIRE(a.size() == 40);
  for (const auto& inst : a) CHECK(analyze(inst).flags.case_r5_t.has_value());
  c.seed = 78;
  CHECK(generate_instances(c) != a);
  // A prefix of a longer run is the shorter run.
  c.seed = 77;
  c.instance_cap = 10;
  const auto prefix = generate_instances(c);
  CHECK(std::equal(prefix.begin(), prefix.end(), a.begin()));
}

TEST_CASE("verdicts on the fixtures") {
  SUBCASE("eight-variable r = 5 instance is verified") {
    const auto rec = verify_conjecture_case(fixture("r5_eight_vars.txt"));
    CHECK(rec.status == ConjectureStatus::Verified);
    CHECK(rec.sdepth == 2);
    CHECK(rec.depth <= 2);
    CHECK(rec.flags.case_r5_t == 7);
    CHECK(validate_partition(build_poset(fixture("r5_eight_vars.txt")), rec.witness).ok());
  }
  SUBCASE("five-cubic quotient: premise false") {
    const auto rec = verify_conjecture_case(fixture("five_cubics.txt"));
    CHECK(rec.status == ConjectureStatus::PremiseFalse);
    CHECK(rec.sdepth == 3);
    CHECK(rec.depth == 1);
  }
  SUBCASE("four generators over cubic J: verified") {
    VerifyOptions opt;
    opt.cross_check = true;
    const auto rec = verify_conjecture_case(fixture("four_vars_cubic_j.txt"), opt);
    CHECK(rec.status == ConjectureStatus::Verified);
    CHECK(rec.sdepth == 2);
    CHECK(rec.depth == 2);
    CHECK(rec.depth_rationals == 2);
    CHECK_FALSE(rec.field_disagreement);
  }
}

TEST_CASE("status follows sdepth and depth") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 80; ++trial) {
    const auto inst = stanley::test::random_instance(rng, 4 + rng() % 3, 1, 1 + rng() % 4, 0.3, 0.3);
    const auto rec = verify_conjecture_case(inst);
    const int d = inst.d;
    if (rec.sdepth != d + 1) CHECK(rec.status == ConjectureStatus::PremiseFalse);
    if (rec.sdepth == d + 1 && rec.depth <= d + 1) CHECK(rec.status == ConjectureStatus::Verified);
    if (rec.sdepth == d + 1 && rec.depth > d + 1) CHECK(rec.status == ConjectureStatus::Violation);
    CHECK(rec.depth_ge_d);
    CHECK(rec.sdepth_ge_d);
    if (rec.sdepth_exact) CHECK(rec.sdepth == sdepth(inst).value);
  }
}

TEST_CASE("disjoint intervals lemma") {
  SUBCASE("five-cubic quotient is the r = 5 counterexample") {
    const auto rep = verify_lemma_dep(fixture("five_cubics.txt"));
    CHECK(rep.found);
    CHECK(rep.tops.size() == 5);
    CHECK(rep.depth == 1);
    CHECK(rep.r5_counterexample);
  }
  SUBCASE("no C gives a vacuous report") {
    const int n = 3;
    const auto inst = QuotientInstance::make(n, 1, monos({"x1"}, n), {}, monos({"x1*x2", "x1*x3"}, n));
    const auto rep = verify_lemma_dep(inst);
    CHECK_FALSE(rep.found);
    CHECK(rep.holds);
    CHECK(rep.tops.empty());
  }
  SUBCASE("r <= 4 instances with disjoint intervals have depth >= d+1") {
    CampaignConfig c;
    c.n_max = 4;
    int found = 0;
    for (const auto& inst : generate_instances(c)) {
      const auto rep = verify_lemma_dep(inst);
      found += rep.found;
      CHECK(rep.holds);
    }
    CHECK(found > 0);
  }
}

TEST_CASE("campaign output is deterministic and independent of the job count") {
  CampaignConfig c;
  c.n_max = 4;
  c.e_policy = EPolicy::DegreeD1;
  c.cross_check_every = 7;
  c.output = scratch_dir("one");
  std::vector<std::string> order1, order4;
  const auto s1 = run_campaign(c, 1, true, [&](const VerdictRecord& r) {
    order1.push_back(format_instance(r.form.instance));
  });
  auto c4 = c;
  c4.output = scratch_dir("four");
  const auto s4 = run_campaign(c4, 4, true, [&](const VerdictRecord& r) {
    order4.push_back(format_instance(r.form.instance));
  });
  CHECK(order1 == order4);
  CHECK(s1.total == s4.total);
  CHECK(s1.verified == s4.verified);
  CHECK(s1.violations == 0);
  CHECK(s1.errors == 0);
  CHECK(s1.cross_checked > 0);
  CHECK(s1.field_disagreements == 0);
  CHECK(s1.total == s1.premise_false + s1.verified + s1.violations + s1.refuted_violations);

  std::ifstream rec1(c.output / "records.ndjson"), rec4(c4.output / "records.ndjson");
  std::string line1, line4;
  std::size_t lines = 0;
  while (std::getline(rec1, line1) && std::getline(rec4, line4)) {
    auto j1 = json::parse(line1), j4 = json::parse(line4);
    j1.erase("runtime_ms");
    j4.erase("runtime_ms");
    CHECK(j1 == j4);
    ++lines;
  }
  CHECK(lines == s1.total);
  const auto summary = json::parse(std::ifstream(c.output / "summary.json"));
  CHECK(summary["total"] == s1.total);
  CHECK(std::filesystem::exists(c.output / "violations.txt"));
}
