#pragma once

#include <filesystem>
#include <vector>

#include <nlohmann/json.hpp>

#include "stanley/depth.hpp"
#include "stanley/lab.hpp"
#include "stanley/partition_engine.hpp"

namespace stanley {

using nlohmann::json;

void to_json(json& j, const Monomial& m);
void to_json(json& j, const Interval& iv);
void to_json(json& j, const IntervalPartition& p);
void to_json(json& j, const HypothesisFlags& f);
void to_json(json& j, const StructureReport& r);
void to_json(json& j, const KoszulSummary& k);
void to_json(json& j, const BaseInterval& b);
void to_json(json& j, const PbPartition& pb);
void to_json(json& j, const Path& p);
void to_json(json& j, const TUGSets& t);
void to_json(json& j, const PbCheck& c);
void to_json(json& j, const LemmaDepReport& r);
void to_json(json& j, const OracleRecheck& r);
void to_json(json& j, const VerdictRecord& r);
void to_json(json& j, const CampaignSummary& s);

/// Depth as a JSON value: an integer, or "inf" for the zero module.
json depth_json(int depth);

/// Writes records.ndjson, summary.json and violations.txt (instances of
/// confirmed violations) under config.output.
void write_campaign_files(const CampaignConfig& config, const std::vector<const VerdictRecord*>& records,
                          const CampaignSummary& summary);

}  // namespace stanley
