#pragma once

#include <stdexcept>
#include <string>

namespace hybond {

struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// sim-engine
struct SchedulingInPast : SimError {
    using SimError::SimError;
};

// phy-links
struct AlreadyDown : SimError {
    using SimError::SimError;
};
struct AlreadySignalLost : SimError {
    using SimError::SimError;
};

// l2-fabric
struct ResolutionTimeout : SimError {
    using SimError::SimError;
};

// traffic-metrics
struct EmptySampleSet : SimError {
    using SimError::SimError;
};
struct InsufficientReplicas : SimError {
    using SimError::SimError;
};

// scenario-runner
struct ParseError : SimError {
    using SimError::SimError;
};
struct ValidationError : SimError {
    using SimError::SimError;
};
struct IoError : SimError {
    using SimError::SimError;
};

}  // namespace hybond
