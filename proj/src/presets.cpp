#include "hybond/presets.hpp"

#include "hybond/errors.hpp"

namespace hybond {

namespace {

Scenario delay_base(const std::string& name, Monitor monitor, Technology primary,
                    Duration interval) {
    Scenario s = default_scenario();
    s.name = name;
    s.replicas = 600;
    s.bond.monitor = monitor;
    s.bond.primary = primary;
    if (monitor == Monitor::Arp) {
        s.bond.arp_interval = interval;
        s.histogram_bin_width = ms(25);
    } else {
        s.bond.miimon = interval;
        s.histogram_bin_width = ms(2);
    }
    // One-monitor-period randomization window decorrelates the fault from
    // the tick grid.
    s.fault.at = sec(10);
    s.fault.window = interval;
    s.duration = sec(16);
    return s;
}

Scenario plr_base(const std::string& name, Technology first, Direction dir) {
    Scenario s = default_scenario();
    s.name = name;
    s.replicas = 200;
    s.bond.monitor = Monitor::Mii;
    s.bond.miimon = ms(100);
    s.bond.primary = first;
    s.histogram_bin_width = ms(2);
    s.fault.kind = FaultKind::ManualSwitch;
    s.fault.at = sec(20);
    s.fault.window = ms(100);
    s.flow_enabled = true;
    s.flow.direction = dir;
    s.flow.rate_bps = 10'000'000;
    s.flow.packet_size_bytes = 1250;
    s.flow.duration = sec(40);
    s.flow.start_at = 0;
    s.duration = sec(41);
    return s;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {
        "arp-shutdown-lifi-t100", "arp-shutdown-lifi-t500", "arp-shutdown-wifi-t100",
        "mii-shutdown-lifi-t20",  "mii-shutdown-lifi-t180",
        "mii-shutdown-lifi-t20-quantized",
        "arp-loss-lifi-t100",     "arp-loss-wifi-t100",     "arp-loss-wifi-t500",
        "mii-loss-lifi-t100",     "mii-loss-lifi-t500",
        "mii-loss-wifi-t100",     "mii-loss-wifi-t500",
        "plr-downlink-lifi",      "plr-uplink-lifi",
        "plr-downlink-wifi",      "plr-uplink-wifi",
    };
}

Scenario preset(const std::string& name) {
    if (name == "arp-shutdown-lifi-t100") {
        Scenario s = delay_base(name, Monitor::Arp, Technology::LiFi, ms(100));
        s.fault.kind = FaultKind::InterfaceShutdown;
        s.fault.target = Technology::LiFi;
        return s;
    }
    if (name == "arp-shutdown-lifi-t500") {
        Scenario s = delay_base(name, Monitor::Arp, Technology::LiFi, ms(500));
        s.fault.kind = FaultKind::InterfaceShutdown;
        s.fault.target = Technology::LiFi;
        return s;
    }
    if (name == "arp-shutdown-wifi-t100") {
        Scenario s = delay_base(name, Monitor::Arp, Technology::WiFi, ms(100));
        s.fault.kind = FaultKind::InterfaceShutdown;
        s.fault.target = Technology::WiFi;
        return s;
    }
    if (name == "mii-shutdown-lifi-t20") {
        Scenario s = delay_base(name, Monitor::Mii, Technology::LiFi, ms(20));
        s.fault.kind = FaultKind::InterfaceShutdown;
        s.fault.target = Technology::LiFi;
        return s;
    }
    if (name == "mii-shutdown-lifi-t180") {
        Scenario s = delay_base(name, Monitor::Mii, Technology::LiFi, ms(180));
        s.fault.kind = FaultKind::InterfaceShutdown;
        s.fault.target = Technology::LiFi;
        return s;
    }
    if (name == "mii-shutdown-lifi-t20-quantized") {
        Scenario s = delay_base(name, Monitor::Mii, Technology::LiFi, ms(20));
        s.fault.kind = FaultKind::InterfaceShutdown;
        s.fault.target = Technology::LiFi;
        // The dongle firmware exports its link flag on a 7 ms grid. A fault
        // window shorter than the monitor period then reaches only two grid
        // points (10038 ms and 10045 ms), which are picked up by different
        // 20 ms ticks: the delay histogram splits into two separated peaks.
        s.lifi.carrier.internal_poll_period = ms(7);
        s.fault.at = sec(10) + ms(33);
        s.fault.window = ms(10);
        return s;
    }
    if (name == "arp-loss-lifi-t100") {
        Scenario s = delay_base(name, Monitor::Arp, Technology::LiFi, ms(100));
        s.fault.kind = FaultKind::SignalLoss;
        s.fault.target = Technology::LiFi;
        // Calibration: the LiFi carrier-loss runs react one ARP interval
        // earlier than the shutdown runs.
        s.bond.missed_reply_threshold = 1;
        return s;
    }
    if (name == "arp-loss-wifi-t100") {
        Scenario s = delay_base(name, Monitor::Arp, Technology::WiFi, ms(100));
        s.fault.kind = FaultKind::SignalLoss;
        s.fault.target = Technology::WiFi;
        return s;
    }
    if (name == "arp-loss-wifi-t500") {
        Scenario s = delay_base(name, Monitor::Arp, Technology::WiFi, ms(500));
        s.fault.kind = FaultKind::SignalLoss;
        s.fault.target = Technology::WiFi;
        return s;
    }
    if (name == "mii-loss-lifi-t100" || name == "mii-loss-lifi-t500") {
        const Duration t = name.ends_with("t100") ? ms(100) : ms(500);
        Scenario s = delay_base(name, Monitor::Mii, Technology::LiFi, t);
        s.fault.kind = FaultKind::SignalLoss;
        s.fault.target = Technology::LiFi;
        s.duration = sec(18);
        return s;
    }
    if (name == "mii-loss-wifi-t100" || name == "mii-loss-wifi-t500") {
        const Duration t = name.ends_with("t100") ? ms(100) : ms(500);
        Scenario s = delay_base(name, Monitor::Mii, Technology::WiFi, t);
        s.fault.kind = FaultKind::SignalLoss;
        s.fault.target = Technology::WiFi;
        s.duration = sec(16);
        return s;
    }
    if (name == "plr-downlink-lifi")
        return plr_base(name, Technology::LiFi, Direction::Downlink);
    if (name == "plr-uplink-lifi")
        return plr_base(name, Technology::LiFi, Direction::Uplink);
    if (name == "plr-downlink-wifi")
        return plr_base(name, Technology::WiFi, Direction::Downlink);
    if (name == "plr-uplink-wifi")
        return plr_base(name, Technology::WiFi, Direction::Uplink);
    throw ValidationError("unknown preset: " + name);
}

}  // namespace hybond
