#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>

namespace hybond {

struct MacAddress {
    std::array<std::uint8_t, 6> octets{};

    bool operator==(const MacAddress&) const = default;
    bool is_broadcast() const {
        for (auto o : octets)
            if (o != 0xff) return false;
        return true;
    }

    static MacAddress broadcast() {
        MacAddress m;
        m.octets.fill(0xff);
        return m;
    }
    static MacAddress parse(const std::string& text);  // "02:00:00:00:00:01"
    std::string str() const;
};

struct MacHash {
    std::size_t operator()(const MacAddress& m) const {
        std::size_t h = 0;
        for (auto o : m.octets) h = h * 131 + o;
        return h;
    }
};

struct IpAddress {
    std::uint32_t value = 0;

    bool operator==(const IpAddress&) const = default;
    static IpAddress parse(const std::string& text);  // dotted quad
    std::string str() const;
};

struct IpHash {
    std::size_t operator()(const IpAddress& ip) const {
        return std::hash<std::uint32_t>{}(ip.value);
    }
};

enum class ArpOp { Request, Reply, GratuitousReply };

struct ArpPacket {
    ArpOp op = ArpOp::Request;
    IpAddress sender_ip;
    IpAddress target_ip;
    MacAddress sender_mac;
};

struct UdpDatagram {
    std::uint64_t flow_id = 0;
    std::uint64_t packet_index = 0;  // position on the CBR grid
};

enum class EtherType { Arp, IPv4 };

using PortId = int;
constexpr PortId kNoPort = -1;

struct Frame {
    MacAddress src_mac;
    MacAddress dst_mac;
    EtherType ethertype = EtherType::IPv4;
    std::uint32_t size_bytes = 0;
    std::variant<ArpPacket, UdpDatagram> payload;
    PortId ingress_port = kNoPort;

    const ArpPacket* arp() const { return std::get_if<ArpPacket>(&payload); }
    const UdpDatagram* udp() const { return std::get_if<UdpDatagram>(&payload); }
};

constexpr std::uint32_t kArpFrameBytes = 64;

}  // namespace hybond
