#pragma once

#include <string>
#include <vector>

#include "hybond/scenario.hpp"

namespace hybond {

/// Canonical scenario presets, one per experiment family: shutdown and
/// signal-loss delay campaigns under ARP/MII monitoring, and the four
/// intentional-switch PLR campaigns.
std::vector<std::string> preset_names();

/// Throws ValidationError for an unknown name.
Scenario preset(const std::string& name);

}  // namespace hybond
