#include "hybond/campaign.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hybond/errors.hpp"

namespace hybond {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

CampaignResult run_campaign(const Scenario& s) {
    validate(s);
    CampaignResult result;
    result.scenario = s;
    result.scenario_digest = digest(s);
    result.replicas.reserve(s.replicas);

    for (std::uint32_t k = 0; k < s.replicas; ++k) {
        try {
            result.replicas.push_back(run_replica(s, k));
        } catch (const std::exception& e) {
            throw SimError("replica " + std::to_string(k) + ": " + e.what());
        }
        const ReplicaResult& r = result.replicas.back();
        if (const SwitchRecord* rec = r.first_switch()) {
            result.samples.push_back(DelaySample{k, rec->delay});
        }
        result.invariant_violations += r.invariant_violations;
        result.event_conservation_ok &= r.event_conservation_ok;
    }

    if (!result.samples.empty()) {
        result.histogram = build_histogram(result.samples, s.histogram_bin_width);
        std::vector<Duration> delays;
        delays.reserve(result.samples.size());
        for (const DelaySample& d : result.samples) delays.push_back(d.delay);
        std::sort(delays.begin(), delays.end());
        DelaySummary sum;
        sum.min = delays.front();
        sum.max = delays.back();
        double mean = 0.0;
        for (Duration d : delays) mean += static_cast<double>(d);
        sum.mean = mean / static_cast<double>(delays.size());
        sum.median = delays[delays.size() / 2];
        result.summary = sum;
    }

    if (s.flow_enabled && s.replicas >= 2) {
        std::vector<FlowStats> flows;
        flows.reserve(result.replicas.size());
        for (const ReplicaResult& r : result.replicas) {
            if (r.flow) flows.push_back(*r.flow);
        }
        result.plr = plr_stats(flows);
    }
    return result;
}

std::vector<std::string> export_result(const CampaignResult& result,
                                       const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());

    std::vector<std::string> written;
    auto open = [&](const std::string& file) {
        std::ofstream out(fs::path(out_dir) / file, std::ios::binary);
        if (!out) throw IoError("cannot write " + file + " in " + out_dir);
        return out;
    };

    {
        auto out = open("samples.csv");
        out << "replica,trigger_at_us,completed_at_us,delay_us,from,to\n";
        for (const ReplicaResult& r : result.replicas) {
            if (const SwitchRecord* rec = r.first_switch()) {
                out << r.index << ',' << rec->trigger_at << ',' << rec->completed_at
                    << ',' << rec->delay << ',' << name(rec->from) << ','
                    << name(rec->to) << '\n';
            }
        }
        written.push_back("samples.csv");
    }

    if (result.histogram) {
        auto out = open("histogram.csv");
        out << "bin_low_us,bin_high_us,density\n";
        for (const Histogram::Bin& b : result.histogram->bins) {
            out << b.low << ',' << b.high << ',' << fmt_double(b.density) << '\n';
        }
        written.push_back("histogram.csv");
    }

    if (!result.plr.empty()) {
        auto out = open("plr.csv");
        out << "second,mean,ci_low,ci_high\n";
        for (std::size_t sct = 0; sct < result.plr.size(); ++sct) {
            const PlrPoint& p = result.plr[sct];
            out << sct << ',' << fmt_double(p.mean) << ',' << fmt_double(p.ci_low)
                << ',' << fmt_double(p.ci_high) << '\n';
        }
        written.push_back("plr.csv");
    }

    {
        auto out = open("manifest.txt");
        char hex[17];
        std::snprintf(hex, sizeof(hex), "%016llx",
                      static_cast<unsigned long long>(result.scenario_digest));
        out << "scenario: " << result.scenario.name << '\n';
        out << "digest: " << hex << '\n';
        out << "seed: " << result.scenario.seed << '\n';
        out << "replicas: " << result.replicas.size() << '\n';
        out << "samples: " << result.samples.size() << '\n';
        if (result.summary) {
            out << "delay_min_us: " << result.summary->min << '\n';
            out << "delay_max_us: " << result.summary->max << '\n';
            out << "delay_mean_us: " << fmt_double(result.summary->mean) << '\n';
            out << "delay_median_us: " << result.summary->median << '\n';
        }
        out << "invariant_violations: " << result.invariant_violations << '\n';
        out << "event_conservation: "
            << (result.event_conservation_ok ? "ok" : "violated") << '\n';
        written.push_back("manifest.txt");
    }
    return written;
}

}  // namespace hybond
