#include <doctest.h>

#include <vector>

#include "hybond/engine.hpp"
#include "hybond/fabric.hpp"
#include "hybond/sim_time.hpp"

using namespace hybond;

namespace {

const MacAddress kMacA = MacAddress::parse("02:00:00:00:00:0a");
const MacAddress kMacB = MacAddress::parse("02:00:00:00:00:0b");
const MacAddress kMacC = MacAddress::parse("02:00:00:00:00:0c");
const IpAddress kIpA = IpAddress::parse("10.0.0.10");
const IpAddress kIpB = IpAddress::parse("10.0.0.11");

Frame udp_frame(const MacAddress& src, const MacAddress& dst) {
    Frame f;
    f.src_mac = src;
    f.dst_mac = dst;
    f.ethertype = EtherType::IPv4;
    f.size_bytes = 100;
    f.payload = UdpDatagram{1, 7};
    return f;
}

Frame grat_arp(const IpAddress& ip, const MacAddress& mac) {
    Frame f;
    f.src_mac = mac;
    f.dst_mac = MacAddress::broadcast();
    f.ethertype = EtherType::Arp;
    f.size_bytes = kArpFrameBytes;
    f.payload = ArpPacket{ArpOp::GratuitousReply, ip, ip, mac};
    return f;
}

}  // namespace

TEST_CASE("unknown unicast floods everywhere except the ingress port") {
    Simulator sim;
    LanSwitch lan(sim);
    std::vector<int> hits(3, 0);
    for (int p = 0; p < 3; ++p) {
        lan.add_port(0, [&hits, p](const Frame&, SimTime) { ++hits[static_cast<std::size_t>(p)]; });
    }
    lan.ingress(0, udp_frame(kMacA, kMacB), 100);
    CHECK(hits == std::vector<int>{0, 1, 1});
    // Src was learned on port 0.
    REQUIRE(lan.table().lookup(kMacA));
    CHECK(lan.table().lookup(kMacA)->port == 0);
}

TEST_CASE("learned unicast goes out one port only") {
    Simulator sim;
    LanSwitch lan(sim);
    std::vector<int> hits(3, 0);
    for (int p = 0; p < 3; ++p) {
        lan.add_port(0, [&hits, p](const Frame&, SimTime) { ++hits[static_cast<std::size_t>(p)]; });
    }
    lan.table().learn(kMacB, 2, 0);
    lan.ingress(0, udp_frame(kMacA, kMacB), 100);
    CHECK(hits == std::vector<int>{0, 0, 1});
}

TEST_CASE("broadcast floods even when the table knows every MAC") {
    Simulator sim;
    LanSwitch lan(sim);
    int hits = 0;
    for (int p = 0; p < 3; ++p) {
        lan.add_port(0, [&](const Frame&, SimTime) { ++hits; });
    }
    lan.table().learn(kMacA, 0, 0);
    lan.ingress(0, udp_frame(kMacA, MacAddress::broadcast()), 100);
    CHECK(hits == 2);
}

TEST_CASE("re-learning moves a MAC to the newest port (last writer wins)") {
    Simulator sim;
    LanSwitch lan(sim);
    for (int p = 0; p < 2; ++p) lan.add_port(0, [](const Frame&, SimTime) {});
    lan.ingress(0, udp_frame(kMacA, kMacB), 100);
    lan.ingress(1, udp_frame(kMacA, kMacB), 200);
    REQUIRE(lan.table().lookup(kMacA));
    CHECK(lan.table().lookup(kMacA)->port == 1);
    CHECK(lan.table().lookup(kMacA)->learned_at == 200);
}

TEST_CASE("egress delay defers delivery by exactly that amount") {
    Simulator sim;
    LanSwitch lan(sim);
    lan.add_port(0, [](const Frame&, SimTime) {});
    SimTime at = kNever;
    lan.add_port(ms(3), [&](const Frame&, SimTime t) { at = t; });
    lan.table().learn(kMacB, 1, 0);
    sim.schedule(sec(1), [&]() { lan.ingress(0, udp_frame(kMacA, kMacB), sec(1)); });
    sim.run_until(sec(2));
    CHECK(at == sec(1) + ms(3));
}

TEST_CASE("host answers ARP requests for its own IP after the response delay") {
    Simulator sim;
    LanSwitch lan(sim);
    Host host(sim, lan, kIpA, kMacA, ms(1), ms(2), sec(1));
    std::vector<std::pair<ArpOp, SimTime>> seen;
    PortId other = lan.add_port(0, [&](const Frame& f, SimTime t) {
        if (const ArpPacket* a = f.arp()) seen.push_back({a->op, t});
    });
    PortId hp = lan.add_port(0, [&](const Frame& f, SimTime t) { host.on_frame(f, t); });
    host.attach(hp);

    Frame req;
    req.src_mac = kMacB;
    req.dst_mac = MacAddress::broadcast();
    req.ethertype = EtherType::Arp;
    req.size_bytes = kArpFrameBytes;
    req.payload = ArpPacket{ArpOp::Request, kIpB, kIpA, kMacB};
    sim.schedule(sec(1), [&]() { lan.ingress(other, req, sec(1)); });
    sim.run_until(sec(2));

    // Reply emitted 2 ms after receipt, plus 1 ms host link on the way back.
    REQUIRE(seen.size() == 1);
    CHECK(seen[0].first == ArpOp::Reply);
    CHECK(seen[0].second == sec(1) + ms(2) + ms(1));
    // The request itself taught the host the asker's binding.
    REQUIRE(host.cached(kIpB));
    CHECK(*host.cached(kIpB) == kMacB);
}

TEST_CASE("host ignores ARP requests for addresses it does not own") {
    Simulator sim;
    LanSwitch lan(sim);
    Host host(sim, lan, kIpA, kMacA, 0, 0, sec(1));
    int egress = 0;
    PortId other = lan.add_port(0, [&](const Frame&, SimTime) { ++egress; });
    PortId hp = lan.add_port(0, [&](const Frame& f, SimTime t) { host.on_frame(f, t); });
    host.attach(hp);
    Frame req;
    req.src_mac = kMacB;
    req.dst_mac = MacAddress::broadcast();
    req.ethertype = EtherType::Arp;
    req.size_bytes = kArpFrameBytes;
    req.payload = ArpPacket{ArpOp::Request, kIpB, IpAddress::parse("10.0.0.99"), kMacB};
    lan.ingress(other, req, 100);
    sim.run_until(sec(1));
    CHECK(egress == 0);
}

TEST_CASE("gratuitous ARP overwrites the cache: last writer wins") {
    Simulator sim;
    LanSwitch lan(sim);
    Host host(sim, lan, kIpA, kMacA, 0, 0, sec(1));
    PortId hp = lan.add_port(0, [&](const Frame& f, SimTime t) { host.on_frame(f, t); });
    host.attach(hp);
    host.on_frame(grat_arp(kIpB, kMacB), 100);
    host.on_frame(grat_arp(kIpB, kMacC), 200);
    REQUIRE(host.cached(kIpB));
    CHECK(*host.cached(kIpB) == kMacC);
    // Duplicate announcement is idempotent.
    host.on_frame(grat_arp(kIpB, kMacC), 300);
    CHECK(*host.cached(kIpB) == kMacC);
}

TEST_CASE("warm cache resolves immediately") {
    Simulator sim;
    LanSwitch lan(sim);
    Host host(sim, lan, kIpA, kMacA, 0, 0, sec(1));
    host.warm_cache(kIpB, kMacB);
    std::optional<MacAddress> got;
    SimTime when = kNever;
    host.resolve(kIpB, [&](std::optional<MacAddress> m, SimTime t) {
        got = m;
        when = t;
    });
    REQUIRE(got);
    CHECK(*got == kMacB);
    CHECK(when == 0);
}

TEST_CASE("cold resolve completes after one request/reply round trip") {
    Simulator sim;
    LanSwitch lan(sim);
    Host a(sim, lan, kIpA, kMacA, ms(1), ms(1), sec(1));
    Host b(sim, lan, kIpB, kMacB, ms(1), ms(1), sec(1));
    PortId pa = lan.add_port(0, [&](const Frame& f, SimTime t) { a.on_frame(f, t); });
    PortId pb = lan.add_port(0, [&](const Frame& f, SimTime t) { b.on_frame(f, t); });
    a.attach(pa);
    b.attach(pb);

    std::optional<MacAddress> got;
    SimTime when = kNever;
    sim.schedule(sec(1), [&]() {
        a.resolve(kIpB, [&](std::optional<MacAddress> m, SimTime t) {
            got = m;
            when = t;
        });
    });
    sim.run_until(sec(2));
    REQUIRE(got);
    CHECK(*got == kMacB);
    // 1 ms out + 1 ms response turnaround + 1 ms back.
    CHECK(when == sec(1) + ms(3));
}

TEST_CASE("resolve with nobody answering times out with nullopt") {
    Simulator sim;
    LanSwitch lan(sim);
    Host a(sim, lan, kIpA, kMacA, ms(1), ms(1), ms(500));
    PortId pa = lan.add_port(0, [&](const Frame& f, SimTime t) { a.on_frame(f, t); });
    a.attach(pa);
    std::optional<MacAddress> got = kMacC;  // sentinel, must be cleared
    SimTime when = kNever;
    sim.schedule(sec(1), [&]() {
        a.resolve(kIpB, [&](std::optional<MacAddress> m, SimTime t) {
            got = m;
            when = t;
        });
    });
    sim.run_until(sec(3));
    CHECK_FALSE(got);
    CHECK(when == sec(1) + ms(500));
}

TEST_CASE("callback-less resolve throws ResolutionTimeout on a dead medium") {
    Simulator sim;
    LanSwitch lan(sim);
    Host a(sim, lan, kIpA, kMacA, ms(1), ms(1), ms(500));
    PortId pa = lan.add_port(0, [&](const Frame& f, SimTime t) { a.on_frame(f, t); });
    a.attach(pa);
    sim.schedule(sec(1), [&]() { a.resolve(kIpB); });
    CHECK_THROWS_AS(sim.run_until(sec(3)), ResolutionTimeout);
}

TEST_CASE("host-to-host UDP uses the cached binding") {
    Simulator sim;
    LanSwitch lan(sim);
    Host a(sim, lan, kIpA, kMacA, ms(1), 0, sec(1));
    Host b(sim, lan, kIpB, kMacB, ms(1), 0, sec(1));
    PortId pa = lan.add_port(0, [&](const Frame& f, SimTime t) { a.on_frame(f, t); });
    PortId pb = lan.add_port(0, [&](const Frame& f, SimTime t) { b.on_frame(f, t); });
    a.attach(pa);
    b.attach(pb);
    lan.table().learn(kMacB, pb, 0);

    std::vector<std::uint64_t> got;
    b.set_udp_sink([&](const UdpDatagram& d, SimTime) { got.push_back(d.packet_index); });

    CHECK_FALSE(a.send_udp(kIpB, UdpDatagram{0, 1}, 100, 0));  // cold cache
    a.warm_cache(kIpB, kMacB);
    sim.schedule(sec(1), [&]() { CHECK(a.send_udp(kIpB, UdpDatagram{0, 2}, 100, sec(1))); });
    sim.run_until(sec(2));
    CHECK(got == std::vector<std::uint64_t>{2});
}
