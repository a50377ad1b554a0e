// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_TYPES_HPP
#define MANETSIM_TYPES_HPP

#include <cstdint>

namespace manetsim {

/// Simulation clock value in seconds. Continuous, never decreases in a run.
using SimTime = double;

/// Node identifier; nodes are numbered 0..node_count-1 and ids are stable
/// for the whole run.
using NodeId = std::uint32_t;

/// Destination sequence number. 64-bit and never wraps within a run.
using SeqNo = std::uint64_t;

/// CBR flow identifier (index into the run's flow list).
using FlowId = std::uint32_t;

struct Position {
    double x = 0.0;
    double y = 0.0;
};

inline double distance_sq(Position a, Position b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

} // namespace manetsim

#endif
