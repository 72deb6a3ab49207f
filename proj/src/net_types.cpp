#include "hybond/net_types.hpp"

#include <cstdio>

#include "hybond/errors.hpp"

namespace hybond {

MacAddress MacAddress::parse(const std::string& text) {
    MacAddress m;
    unsigned v[6];
    if (std::sscanf(text.c_str(), "%x:%x:%x:%x:%x:%x", &v[0], &v[1], &v[2], &v[3],
                    &v[4], &v[5]) != 6) {
        throw ParseError("bad MAC address: " + text);
    }
    for (int i = 0; i < 6; ++i) {
        if (v[i] > 0xff) throw ParseError("bad MAC address: " + text);
        m.octets[i] = static_cast<std::uint8_t>(v[i]);
    }
    return m;
}

std::string MacAddress::str() const {
    char buf[18];
    std::snprintf(buf, sizeof(buf), "%02x:%02x:%02x:%02x:%02x:%02x", octets[0],
                  octets[1], octets[2], octets[3], octets[4], octets[5]);
    return buf;
}

IpAddress IpAddress::parse(const std::string& text) {
    unsigned a, b, c, d;
    if (std::sscanf(text.c_str(), "%u.%u.%u.%u", &a, &b, &c, &d) != 4 || a > 255 ||
        b > 255 || c > 255 || d > 255) {
        throw ParseError("bad IP address: " + text);
    }
    return IpAddress{(a << 24) | (b << 16) | (c << 8) | d};
}

std::string IpAddress::str() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%u.%u.%u.%u", (value >> 24) & 0xff,
                  (value >> 16) & 0xff, (value >> 8) & 0xff, value & 0xff);
    return buf;
}

}  // namespace hybond
