#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stanley/depth.hpp"
#include "stanley/sdepth.hpp"
#include "stanley/structure.hpp"

namespace stanley {

enum class EPolicy { None, DegreeD1, InsideXt };
enum class EnumerationMode { Exhaustive, Random, Single };

struct CampaignConfig {
  int n_min = 1;
  int n_max = 5;
  int d = 1;
  int r_min = 1;
  int r_max = 4;
  EPolicy e_policy = EPolicy::None;
  /// Random mode: probability that a candidate degree d+1 / d+2 monomial
  /// becomes a generator of J, and that a candidate joins E.
  double j_density = 0.3;
  double e_density = 0.3;
  EnumerationMode mode = EnumerationMode::Exhaustive;
  std::uint64_t seed = 1;
  /// Unset: the STANLEY_FIELD default.
  std::optional<Field> field;
  /// Maximum number of instances (0 = no limit); the count in random mode.
  std::size_t instance_cap = 0;
  std::filesystem::path output = "campaign-out";
  /// Exhaustive mode refuses n above this.
  int exhaustive_bound = 6;
  /// Keep only instances where HypothesisFlags::case_r5_t is set.
  bool require_t_hypothesis = false;
  /// Also run verify_lemma_dep on every instance.
  bool lemma_dep = false;
  /// Every k-th record also gets depth over the rationals and GF(32003).
  std::size_t cross_check_every = 0;
  /// Exact sdepth is climbed only for posets up to this size; above it the
  /// record keeps the bound that decides the status.
  std::size_t exact_sdepth_limit = 64;
  /// Single mode: the instance carried by the config file.
  std::optional<QuotientInstance> instance;
};

/// Parses `key = value` lines; F:/E:/J: lines (with n and d) give a
/// single-instance campaign.
CampaignConfig parse_campaign_config(std::string_view text);
CampaignConfig load_campaign_config(const std::filesystem::path& path);
void validate_config(const CampaignConfig& config);

/// Relabeling-invariant form of an instance. Variables are first ordered
/// by an occurrence signature; the key is then the least generator
/// sequence over relabelings that respect that order.
struct CanonicalForm {
  std::vector<std::uint64_t> key;
  QuotientInstance instance;  ///< the instance under the minimizing relabeling
  bool exact = true;          ///< false if relabelings were sampled
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.key == b.key; }
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) { return a.key <=> b.key; }
};

CanonicalForm canonical_form(const QuotientInstance& inst);

/// Exhaustive: one instance per canonical form, sorted by it. Random:
/// `instance_cap` instances, reproducible from the seed.
std::vector<QuotientInstance> generate_instances(const CampaignConfig& config);

enum class ConjectureStatus { PremiseFalse, Verified, Violation };
std::string to_string(ConjectureStatus status);

struct PbCheck {
  Monomial b;
  int dropped = 0;
  bool built = false;          ///< sdepth(I_b/J_b) >= d+2
  bool invariants_ok = true;   ///< decoration invariants held
  std::string message;
};

struct LemmaDepReport {
  int r = 0;
  /// c_i with pairwise disjoint [f_i, c_i]; empty if none exist.
  std::vector<Monomial> tops;
  bool found = false;
  int depth = 0;
  /// depth >= d+1 when found and r <= 4; vacuous otherwise.
  bool holds = true;
  /// found, r = 5 and depth <= d.
  bool r5_counterexample = false;
};

/// Looks for c_i in C with [f_i, c_i] pairwise disjoint, then compares
/// with the depth.
LemmaDepReport verify_lemma_dep(const QuotientInstance& inst, const Field& field = Field::gf2());

struct OracleRecheck {
  int sdepth = 0;
  std::string sdepth_route;  ///< "brute-force" or "untrimmed-search"
  int taylor_depth = 0;
  bool confirmed = false;
};

struct VerdictRecord {
  std::size_t index = 0;
  CanonicalForm form;
  int n = 0, d = 0, r = 0, s = 0, q = 0;
  std::size_t poset_size = 0;
  int sdepth = 0;
  bool sdepth_exact = true;
  IntervalPartition witness;
  Field field;
  int depth = 0;
  std::optional<int> depth_rationals;
  std::optional<int> depth_gfp;
  bool field_disagreement = false;
  HypothesisFlags flags;
  ConjectureStatus status = ConjectureStatus::PremiseFalse;
  std::optional<OracleRecheck> recheck;
  bool depth_ge_d = true;
  bool sdepth_ge_d = true;
  /// r = 4, E empty, |B| < 2r: depth <= d+1 is expected.
  std::optional<bool> shen_bound;
  std::optional<PbCheck> pb;
  std::optional<LemmaDepReport> lemma_dep;
  double runtime_ms = 0;
};

struct VerifyOptions {
  Field field = Field::gf2();
  bool cross_check = false;
  bool lemma_dep = false;
  bool pb_check = true;
  std::size_t exact_sdepth_limit = 64;
};

VerdictRecord verify_conjecture_case(const QuotientInstance& inst, const VerifyOptions& options = {});

struct CampaignSummary {
  std::size_t total = 0;
  std::size_t premise_false = 0;
  std::size_t verified = 0;
  std::size_t violations = 0;            ///< survived re-verification
  std::size_t refuted_violations = 0;    ///< oracles disagreed with the primary route
  std::size_t depth_below_d = 0;
  std::size_t sdepth_below_d = 0;
  std::size_t shen_checked = 0;
  std::size_t shen_failed = 0;
  std::size_t pb_attempted = 0;
  std::size_t pb_built = 0;
  std::size_t pb_invariant_failures = 0;
  std::size_t lemma_dep_found = 0;
  std::size_t lemma_dep_failures = 0;
  std::size_t lemma_dep_r5_counterexamples = 0;
  std::size_t cross_checked = 0;
  std::size_t field_disagreements = 0;
  std::size_t errors = 0;
  double max_runtime_ms = 0;
  double wall_seconds = 0;
  std::vector<VerdictRecord> violation_records;
  std::vector<std::string> error_messages;
  int exit_code() const { return violations > 0 ? 1 : 0; }
};

/// Verifies every generated instance with `jobs` workers, writes
/// records.ndjson and summary.json under config.output (unless
/// `write_files` is false) and returns the summary. Records are ordered
/// by canonical form. `on_record` sees each record in that order.
CampaignSummary run_campaign(const CampaignConfig& config, unsigned jobs = 1,
                             bool write_files = true,
                             const std::function<void(const VerdictRecord&)>& on_record = {});

}  // namespace stanley
