#include "hybond/sim_time.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "hybond/errors.hpp"

namespace hybond {

Duration parse_duration(const std::string& text) {
    if (text.empty()) throw ParseError("empty duration");
    std::size_t pos = 0;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) {
        ++pos;
    }
    if (pos == 0) throw ParseError("bad duration: " + text);
    const double value = std::strtod(text.substr(0, pos).c_str(), nullptr);
    const std::string unit = text.substr(pos);
    double scale;
    if (unit.empty() || unit == "us") {
        scale = 1.0;
    } else if (unit == "ms") {
        scale = 1e3;
    } else if (unit == "s") {
        scale = 1e6;
    } else {
        throw ParseError("bad duration unit: " + text);
    }
    const double us = value * scale;
    const double rounded = std::round(us);
    // Reject anything finer than the 1 us resolution.
    if (us < 0 || std::abs(us - rounded) > 1e-6) {
        throw ParseError("bad duration: " + text);
    }
    return static_cast<Duration>(rounded);
}

std::string format_duration(Duration d) { return std::to_string(d) + "us"; }

}  // namespace hybond
