#include "hybond/scenario.hpp"

#include <map>
#include <sstream>
#include <vector>

#include "hybond/errors.hpp"

namespace hybond {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::uint64_t parse_u64(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        std::uint64_t n = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return n;
    } catch (const std::exception&) {
        throw ParseError("bad integer for " + key + ": " + v);
    }
}

Technology parse_tech(const std::string& v, const std::string& key) {
    if (v == "lifi") return Technology::LiFi;
    if (v == "wifi") return Technology::WiFi;
    throw ValidationError("bad interface for " + key + ": " + v);
}

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw ParseError("bad boolean for " + key + ": " + v);
}

}  // namespace

Scenario default_scenario() {
    Scenario s;
    s.bond_ip = IpAddress::parse("10.0.0.1");
    s.control_ip = IpAddress::parse("10.0.0.2");
    s.bond.arp_ip_target = s.control_ip;
    s.lifi.mac = MacAddress::parse("02:00:00:00:00:01");
    s.wifi.mac = MacAddress::parse("02:00:00:00:00:02");
    // Calibrated carrier-detection latencies (scenario parameters, not
    // hard-coded behavior): the LiFi dongle is slow to declare the light
    // gone, the WiFi card faster.
    s.lifi.carrier = CarrierModel{sec(2) + ms(550), sec(3) + ms(590), 0};
    s.wifi.carrier = CarrierModel{ms(850), ms(940), 0};
    s.lifi.activation_delay = ms(1) + 500;
    s.wifi.activation_delay = ms(3) + 500;
    return s;
}

void validate(const Scenario& s) {
    if (s.replicas < 1) throw ValidationError("replicas must be >= 1");
    if (s.duration == 0) throw ValidationError("duration must be positive");
    if (s.histogram_bin_width == 0)
        throw ValidationError("histogram_bin_width must be positive");

    const BondConfig& b = s.bond;
    if (b.arp_validate != 3)
        throw ValidationError("arp_validate: only value 3 is supported");
    if (b.fail_over_mac != 1)
        throw ValidationError("fail_over_mac: only value 1 is supported");
    if (b.num_grat_arp < 0) throw ValidationError("num_grat_arp must be >= 0");
    if (b.missed_reply_threshold < 1)
        throw ValidationError("missed_reply_threshold must be >= 1");
    if (b.monitor == Monitor::Arp && b.arp_interval == 0)
        throw ValidationError("ARP monitoring requires arp_interval > 0");
    if (b.monitor == Monitor::Mii && b.miimon == 0)
        throw ValidationError("MII monitoring requires miimon > 0");

    for (const IfaceParams* p : {&s.lifi, &s.wifi}) {
        if (p->carrier.detect_latency_min > p->carrier.detect_latency_max)
            throw ValidationError("carrier detect_latency_min > detect_latency_max");
        if (p->hop_delay == 0) throw ValidationError("hop_delay must be positive");
    }
    if (s.lifi.mac == s.wifi.mac)
        throw ValidationError("the two slaves must have distinct MAC addresses");

    if (s.fault.kind != FaultKind::None) {
        if (s.fault.at + s.fault.window > s.duration)
            throw ValidationError("fault time + window must fit in the duration");
    }
    if (s.flow_enabled) {
        if (s.flow.rate_bps == 0) throw ValidationError("flow rate must be positive");
        if (s.flow.packet_size_bytes == 0)
            throw ValidationError("flow packet_size must be positive");
        if (s.flow.inter_packet_gap() == 0)
            throw ValidationError("flow rate too high for 1us resolution");
        if (s.flow.start_at + s.flow.duration > s.duration)
            throw ValidationError("flow must fit in the scenario duration");
    }
}

Scenario load_config(const std::string& text) {
    Scenario s = default_scenario();
    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ParseError("line " + std::to_string(line_no) + ": bad section");
            section = t.substr(1, t.size() - 2);
            continue;
        }
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        const std::string qual = section + "." + key;

        if (qual == "scenario.name") s.name = value;
        else if (qual == "scenario.duration") s.duration = parse_duration(value);
        else if (qual == "scenario.replicas")
            s.replicas = static_cast<std::uint32_t>(parse_u64(value, qual));
        else if (qual == "scenario.seed") s.seed = parse_u64(value, qual);
        else if (qual == "scenario.histogram_bin_width")
            s.histogram_bin_width = parse_duration(value);

        else if (qual == "bond.mode") {
            if (value != "active-backup")
                throw ValidationError("mode: only active-backup is supported");
        } else if (qual == "bond.primary") s.bond.primary = parse_tech(value, qual);
        else if (qual == "bond.monitor") {
            if (value == "arp") s.bond.monitor = Monitor::Arp;
            else if (value == "mii") s.bond.monitor = Monitor::Mii;
            else throw ValidationError("monitor must be arp or mii");
        } else if (qual == "bond.arp_interval") s.bond.arp_interval = parse_duration(value);
        else if (qual == "bond.arp_ip_target") s.bond.arp_ip_target = IpAddress::parse(value);
        else if (qual == "bond.arp_validate")
            s.bond.arp_validate = static_cast<int>(parse_u64(value, qual));
        else if (qual == "bond.miimon") s.bond.miimon = parse_duration(value);
        else if (qual == "bond.downdelay") s.bond.downdelay = parse_duration(value);
        else if (qual == "bond.updelay") s.bond.updelay = parse_duration(value);
        else if (qual == "bond.fail_over_mac")
            s.bond.fail_over_mac = static_cast<int>(parse_u64(value, qual));
        else if (qual == "bond.num_grat_arp")
            s.bond.num_grat_arp = static_cast<int>(parse_u64(value, qual));
        else if (qual == "bond.missed_reply_threshold")
            s.bond.missed_reply_threshold = static_cast<int>(parse_u64(value, qual));
        else if (qual == "bond.switch_overhead")
            s.bond.switch_overhead = parse_duration(value);

        else if (section == "lifi" || section == "wifi") {
            IfaceParams& p = section == "lifi" ? s.lifi : s.wifi;
            if (key == "mac") p.mac = MacAddress::parse(value);
            else if (key == "detect_latency_min")
                p.carrier.detect_latency_min = parse_duration(value);
            else if (key == "detect_latency_max")
                p.carrier.detect_latency_max = parse_duration(value);
            else if (key == "internal_poll_period")
                p.carrier.internal_poll_period = parse_duration(value);
            else if (key == "activation_delay") p.activation_delay = parse_duration(value);
            else if (key == "hop_delay") p.hop_delay = parse_duration(value);
            else throw ValidationError("unknown key: " + qual);
        }

        else if (qual == "topology.bond_ip") s.bond_ip = IpAddress::parse(value);
        else if (qual == "topology.control_ip") {
            s.control_ip = IpAddress::parse(value);
        } else if (qual == "topology.control_link_delay")
            s.control_link_delay = parse_duration(value);
        else if (qual == "topology.host_response_delay")
            s.host_response_delay = parse_duration(value);
        else if (qual == "topology.resolve_timeout")
            s.resolve_timeout = parse_duration(value);

        else if (qual == "fault.kind") {
            if (value == "none") s.fault.kind = FaultKind::None;
            else if (value == "shutdown") s.fault.kind = FaultKind::InterfaceShutdown;
            else if (value == "signal-loss") s.fault.kind = FaultKind::SignalLoss;
            else if (value == "manual-switch") s.fault.kind = FaultKind::ManualSwitch;
            else throw ValidationError("unknown fault kind: " + value);
        } else if (qual == "fault.target") s.fault.target = parse_tech(value, qual);
        else if (qual == "fault.at") s.fault.at = parse_duration(value);
        else if (qual == "fault.window") s.fault.window = parse_duration(value);

        else if (qual == "flow.enabled") s.flow_enabled = parse_bool(value, qual);
        else if (qual == "flow.direction") {
            if (value == "downlink") s.flow.direction = Direction::Downlink;
            else if (value == "uplink") s.flow.direction = Direction::Uplink;
            else throw ValidationError("flow direction must be downlink or uplink");
        } else if (qual == "flow.rate_bps") s.flow.rate_bps = parse_u64(value, qual);
        else if (qual == "flow.packet_size")
            s.flow.packet_size_bytes = static_cast<std::uint32_t>(parse_u64(value, qual));
        else if (qual == "flow.duration") s.flow.duration = parse_duration(value);
        else if (qual == "flow.start_at") s.flow.start_at = parse_duration(value);

        else throw ValidationError("unknown key: " + qual);
    }
    validate(s);
    return s;
}

std::string serialize(const Scenario& s) {
    std::ostringstream out;
    out << "[scenario]\n";
    out << "name = " << s.name << "\n";
    out << "duration = " << format_duration(s.duration) << "\n";
    out << "replicas = " << s.replicas << "\n";
    out << "seed = " << s.seed << "\n";
    out << "histogram_bin_width = " << format_duration(s.histogram_bin_width) << "\n";

    out << "\n[bond]\n";
    out << "mode = active-backup\n";
    out << "primary = " << name(s.bond.primary) << "\n";
    out << "monitor = " << (s.bond.monitor == Monitor::Arp ? "arp" : "mii") << "\n";
    out << "arp_interval = " << format_duration(s.bond.arp_interval) << "\n";
    out << "arp_ip_target = " << s.bond.arp_ip_target.str() << "\n";
    out << "arp_validate = " << s.bond.arp_validate << "\n";
    out << "miimon = " << format_duration(s.bond.miimon) << "\n";
    out << "downdelay = " << format_duration(s.bond.downdelay) << "\n";
    out << "updelay = " << format_duration(s.bond.updelay) << "\n";
    out << "fail_over_mac = " << s.bond.fail_over_mac << "\n";
    out << "num_grat_arp = " << s.bond.num_grat_arp << "\n";
    out << "missed_reply_threshold = " << s.bond.missed_reply_threshold << "\n";
    out << "switch_overhead = " << format_duration(s.bond.switch_overhead) << "\n";

    for (Technology t : {Technology::LiFi, Technology::WiFi}) {
        const IfaceParams& p = s.iface(t);
        out << "\n[" << name(t) << "]\n";
        out << "mac = " << p.mac.str() << "\n";
        out << "detect_latency_min = " << format_duration(p.carrier.detect_latency_min)
            << "\n";
        out << "detect_latency_max = " << format_duration(p.carrier.detect_latency_max)
            << "\n";
        out << "internal_poll_period = "
            << format_duration(p.carrier.internal_poll_period) << "\n";
        out << "activation_delay = " << format_duration(p.activation_delay) << "\n";
        out << "hop_delay = " << format_duration(p.hop_delay) << "\n";
    }

    out << "\n[topology]\n";
    out << "bond_ip = " << s.bond_ip.str() << "\n";
    out << "control_ip = " << s.control_ip.str() << "\n";
    out << "control_link_delay = " << format_duration(s.control_link_delay) << "\n";
    out << "host_response_delay = " << format_duration(s.host_response_delay) << "\n";
    out << "resolve_timeout = " << format_duration(s.resolve_timeout) << "\n";

    out << "\n[fault]\n";
    const char* kind = "none";
    switch (s.fault.kind) {
        case FaultKind::None: kind = "none"; break;
        case FaultKind::InterfaceShutdown: kind = "shutdown"; break;
        case FaultKind::SignalLoss: kind = "signal-loss"; break;
        case FaultKind::ManualSwitch: kind = "manual-switch"; break;
    }
    out << "kind = " << kind << "\n";
    out << "target = " << name(s.fault.target) << "\n";
    out << "at = " << format_duration(s.fault.at) << "\n";
    out << "window = " << format_duration(s.fault.window) << "\n";

    out << "\n[flow]\n";
    out << "enabled = " << (s.flow_enabled ? "true" : "false") << "\n";
    out << "direction = "
        << (s.flow.direction == Direction::Downlink ? "downlink" : "uplink") << "\n";
    out << "rate_bps = " << s.flow.rate_bps << "\n";
    out << "packet_size = " << s.flow.packet_size_bytes << "\n";
    out << "duration = " << format_duration(s.flow.duration) << "\n";
    out << "start_at = " << format_duration(s.flow.start_at) << "\n";
    return out.str();
}

std::uint64_t digest(const Scenario& s) {
    const std::string text = serialize(s);
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a 64
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace hybond
