#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hybond/metrics.hpp"
#include "hybond/replica.hpp"
#include "hybond/scenario.hpp"

namespace hybond {

struct DelaySummary {
    Duration min = 0;
    Duration max = 0;
    double mean = 0.0;
    Duration median = 0;
};

struct CampaignResult {
    Scenario scenario;
    std::uint64_t scenario_digest = 0;
    std::vector<ReplicaResult> replicas;
    std::vector<DelaySample> samples;  // one per replica with a switch
    std::optional<Histogram> histogram;
    std::vector<PlrPoint> plr;  // empty unless the scenario runs a flow
    std::optional<DelaySummary> summary;
    std::uint64_t invariant_violations = 0;
    bool event_conservation_ok = true;
};

/// Executes scenario.replicas independent replicas and aggregates samples,
/// histogram, PLR series and summary. Replica failures are rethrown with the
/// replica index attached.
CampaignResult run_campaign(const Scenario& s);

/// Writes samples.csv / histogram.csv / plr.csv (as applicable) plus
/// manifest.txt into out_dir. Returns the file names written. Re-running the
/// same scenario+seed produces byte-identical files.
std::vector<std::string> export_result(const CampaignResult& result,
                                       const std::string& out_dir);

}  // namespace hybond
