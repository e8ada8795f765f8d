#include "stanley/report.hpp"

#include <fstream>

namespace stanley {

json depth_json(int depth) {
  if (depth == kInfiniteDepth) return "inf";
  return depth;
}

void to_json(json& j, const Monomial& m) { j = to_string(m); }

void to_json(json& j, const Interval& iv) { j = json::array({iv.lo, iv.hi}); }

void to_json(json& j, const IntervalPartition& p) {
  j = json{{"intervals", p.intervals()}};
  if (p.size() != 0) j["sdepth"] = p.sdepth_value();
}

void to_json(json& j, const HypothesisFlags& f) {
  j = json{{"r", f.r},
           {"case_r_le_4", f.case_r_le_4},
           {"case_r5_t", f.case_r5_t ? json(*f.case_r5_t) : json(nullptr)},
           {"range_ok", f.range_ok},
           {"range_ok_r4_literal", f.range_ok_r4_literal},
           {"omega_obstruction", f.omega_obstruction}};
}

void to_json(json& j, const StructureReport& r) {
  json omegas = json::object();
  for (const auto& [i, w] : r.omegas) omegas[std::to_string(i)] = w;
  j = json{{"s", r.s},   {"q", r.q},     {"B", r.B},     {"C", r.C},
           {"W", r.W},   {"C2", r.C2},   {"C3", r.C3},   {"C23", r.C23},
           {"omegas", omegas}, {"flags", r.flags}};
}

void to_json(json& j, const KoszulSummary& k) {
  json betti = json::array();
  for (const auto& [key, dim] : k.betti) {
    const Monomial degree(Monomial::kMaxVariables, key.second);
    betti.push_back({{"i", key.first}, {"degree", to_string(degree)}, {"dim", dim}});
  }
  j = json{{"field", to_string(k.field)},
           {"pd", k.pd},
           {"depth", depth_json(k.depth)},
           {"koszul_homology", betti}};
}

void to_json(json& j, const BaseInterval& b) {
  j = json{{"index", b.index}, {"f", b.f}, {"top", b.top}, {"u", b.u}, {"u_prime", b.u_prime}};
}

void to_json(json& j, const PbPartition& pb) {
  json h = json::object();
  for (const auto& [a, c] : pb.h()) h[to_string(a)] = c;
  j = json{{"b", pb.b()},
           {"dropped", pb.dropped()},
           {"partition", pb.partition()},
           {"base_intervals", pb.base_intervals()},
           {"labels", pb.labels()},
           {"h", h}};
}

void to_json(json& j, const Path& p) {
  j = json{{"steps", p.steps}, {"images", p.images}, {"weak", p.weak}, {"bad", p.bad},
           {"maximal", p.maximal}};
}

void to_json(json& j, const TUGSets& t) {
  j = json{{"start", t.start},
           {"T", t.T},
           {"U", t.U},
           {"G", t.G},
           {"bad_path_from_start", t.bad_path_from_start},
           {"divisors_closed", t.divisors_closed}};
}

void to_json(json& j, const PbCheck& c) {
  j = json{{"b", c.b}, {"dropped", c.dropped}, {"built", c.built},
           {"invariants_ok", c.invariants_ok}};
  if (!c.message.empty()) j["message"] = c.message;
}

void to_json(json& j, const LemmaDepReport& r) {
  j = json{{"r", r.r},         {"found", r.found}, {"tops", r.tops}, {"depth", depth_json(r.depth)},
           {"holds", r.holds}, {"r5_counterexample", r.r5_counterexample}};
}

void to_json(json& j, const OracleRecheck& r) {
  j = json{{"sdepth", r.sdepth},
           {"sdepth_route", r.sdepth_route},
           {"taylor_depth", depth_json(r.taylor_depth)},
           {"confirmed", r.confirmed}};
}

void to_json(json& j, const VerdictRecord& r) {
  j = json{{"index", r.index},
           {"instance", format_instance(r.form.instance)},
           {"canonical_exact", r.form.exact},
           {"n", r.n},
           {"d", r.d},
           {"r", r.r},
           {"s", r.s},
           {"q", r.q},
           {"poset_size", r.poset_size},
           {"sdepth", r.sdepth},
           {"sdepth_exact", r.sdepth_exact},
           {"witness", r.witness},
           {"field", to_string(r.field)},
           {"depth", depth_json(r.depth)},
           {"flags", r.flags},
           {"status", to_string(r.status)},
           {"depth_ge_d", r.depth_ge_d},
           {"sdepth_ge_d", r.sdepth_ge_d},
           {"runtime_ms", r.runtime_ms}};
  if (r.depth_rationals) {
    j["depth_rationals"] = depth_json(*r.depth_rationals);
    j["depth_gf32003"] = depth_json(*r.depth_gfp);
    j["field_disagreement"] = r.field_disagreement;
  }
  if (r.recheck) j["recheck"] = *r.recheck;
  if (r.shen_bound) j["shen_bound"] = *r.shen_bound;
  if (r.pb) j["pb"] = *r.pb;
  if (r.lemma_dep) j["lemma_dep"] = *r.lemma_dep;
}

void to_json(json& j, const CampaignSummary& s) {
  j = json{{"total", s.total},
           {"premise_false", s.premise_false},
           {"verified", s.verified},
           {"violations", s.violations},
           {"refuted_violations", s.refuted_violations},
           {"depth_below_d", s.depth_below_d},
           {"sdepth_below_d", s.sdepth_below_d},
           {"shen_checked", s.shen_checked},
           {"shen_failed", s.shen_failed},
           {"pb_attempted", s.pb_attempted},
           {"pb_built", s.pb_built},
           {"pb_invariant_failures", s.pb_invariant_failures},
           {"lemma_dep_found", s.lemma_dep_found},
           {"lemma_dep_failures", s.lemma_dep_failures},
           {"lemma_dep_r5_counterexamples", s.lemma_dep_r5_counterexamples},
           {"cross_checked", s.cross_checked},
           {"field_disagreements", s.field_disagreements},
           {"errors", s.errors},
           {"error_messages", s.error_messages},
           {"max_runtime_ms", s.max_runtime_ms},
           {"wall_seconds", s.wall_seconds}};
}

void write_campaign_files(const CampaignConfig& config,
                          const std::vector<const VerdictRecord*>& records,
                          const CampaignSummary& summary) {
  std::filesystem::create_directories(config.output);
  auto open = [&](const char* name) {
    std::ofstream out(config.output / name);
    if (!out) throw Error("cannot write " + (config.output / name).string());
    return out;
  };
  {
    auto out = open("records.ndjson");
    for (const VerdictRecord* r : records) out << json(*r).dump() << '\n';
  }
  {
    auto out = open("summary.json");
    out << json(summary).dump(2) << '\n';
  }
  auto out = open("violations.txt");
  for (const auto& r : summary.violation_records) {
    out << "# record " << r.index << ": sdepth " << r.sdepth << ", depth " << r.depth << '\n'
        << format_instance(r.form.instance) << '\n';
  }
}

}  // namespace stanley
