// Campaign runner CLI for the hybrid LiFi/WiFi active-backup bond simulator.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hybond/campaign.hpp"
#include "hybond/errors.hpp"
#include "hybond/presets.hpp"
#include "hybond/scenario.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hybond::IoError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string hex_digest(std::uint64_t d) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(d));
    return buf;
}

double to_ms(hybond::Duration d) { return static_cast<double>(d) / 1000.0; }

void print_summary(const hybond::CampaignResult& r) {
    std::cout << "scenario: " << r.scenario.name << "\n";
    std::cout << "digest: " << hex_digest(r.scenario_digest) << "\n";
    std::cout << "seed: " << r.scenario.seed << "\n";
    std::cout << "replicas: " << r.replicas.size() << "\n";
    std::cout << "switch samples: " << r.samples.size() << "\n";
    if (r.summary) {
        std::cout << "delay min/median/mean/max (ms): " << to_ms(r.summary->min)
                  << " / " << to_ms(r.summary->median) << " / "
                  << r.summary->mean / 1000.0 << " / " << to_ms(r.summary->max)
                  << "\n";
    }
    if (!r.plr.empty()) {
        double worst = 0.0;
        std::size_t worst_s = 0;
        for (std::size_t s = 0; s < r.plr.size(); ++s) {
            if (r.plr[s].mean > worst) {
                worst = r.plr[s].mean;
                worst_s = s;
            }
        }
        std::cout << "worst-second mean PLR: " << worst * 100.0 << "% (second "
                  << worst_s << ")\n";
    }
    std::cout << "invariant violations: " << r.invariant_violations << "\n";
    std::cout << "event conservation: "
              << (r.event_conservation_ok ? "ok" : "violated") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete-event simulator of LiFi/WiFi active-backup bonding"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Run a measurement campaign");
    std::string config_path;
    std::string preset_name;
    std::string out_dir;
    std::uint32_t replicas = 0;
    std::uint64_t seed = 0;
    auto* opt_config = run->add_option("--config", config_path, "Scenario file");
    auto* opt_preset = run->add_option("--preset", preset_name, "Built-in scenario");
    opt_config->excludes(opt_preset);
    auto* opt_replicas =
        run->add_option("--replicas", replicas, "Override replica count");
    auto* opt_seed = run->add_option("--seed", seed, "Override campaign seed");
    run->add_option("--out", out_dir, "Directory for CSV/manifest export");

    // validate
    auto* val = app.add_subcommand("validate", "Parse and validate a scenario file");
    std::string val_path;
    val->add_option("--config", val_path, "Scenario file")->required();

    // presets
    auto* pre = app.add_subcommand("presets", "List built-in scenarios");
    std::string show_name;
    pre->add_option("--show", show_name, "Print one preset as a scenario file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            if (config_path.empty() == preset_name.empty()) {
                std::cerr << "run: exactly one of --config / --preset is required\n";
                return 2;
            }
            hybond::Scenario s = config_path.empty()
                                     ? hybond::preset(preset_name)
                                     : hybond::load_config(read_file(config_path));
            if (*opt_replicas) s.replicas = replicas;
            if (*opt_seed) s.seed = seed;
            hybond::validate(s);
            const hybond::CampaignResult result = hybond::run_campaign(s);
            print_summary(result);
            if (!out_dir.empty()) {
                for (const std::string& f : hybond::export_result(result, out_dir)) {
                    std::cout << "wrote " << out_dir << "/" << f << "\n";
                }
            }
            return 0;
        }
        if (*val) {
            const hybond::Scenario s = hybond::load_config(read_file(val_path));
            std::cout << "ok: " << s.name << " digest " << hex_digest(hybond::digest(s))
                      << "\n";
            return 0;
        }
        if (*pre) {
            if (!show_name.empty()) {
                std::cout << hybond::serialize(hybond::preset(show_name));
            } else {
                for (const std::string& n : hybond::preset_names()) {
                    std::cout << n << "\n";
                }
            }
            return 0;
        }
    } catch (const hybond::SimError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
