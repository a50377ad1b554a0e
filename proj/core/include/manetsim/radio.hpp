// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_RADIO_HPP
#define MANETSIM_RADIO_HPP

#include <vector>

#include "manetsim/engine.hpp"
#include "manetsim/metrics.hpp"
#include "manetsim/mobility.hpp"
#include "manetsim/packet.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

struct RadioParams {
    double tx_range_m = 250.0;
    double per_hop_latency_s = 0.002;
};

// Idealized unit-disk channel. Two nodes hear each other iff their distance
// is at most tx_range (closed disk); delivery is lossless within range and
// impossible beyond it. Connectivity is evaluated at send time, so a
// receiver leaving range while a packet is in flight still gets it.
class Radio {
  public:
    Radio(RadioParams params, Engine& engine, const RandomWaypointModel& mobility,
          Metrics& metrics);

    bool in_range(NodeId a, NodeId b, SimTime t) const;

    /// All u != node within range at t, ascending by id.
    std::vector<NodeId> neighbors(NodeId node, SimTime t) const;

    /// One transmission to every current neighbor. Always counts exactly one
    /// transmission, even to an empty neighborhood.
    void broadcast(NodeId sender, const Packet& packet);

    /// One transmission toward a specific receiver. Returns false when the
    /// receiver is out of range (the caller's link-break notification); the
    /// attempt is counted either way.
    bool unicast(NodeId sender, NodeId receiver, const Packet& packet);

    const RadioParams& params() const { return params_; }

  private:
    RadioParams params_;
    double range_sq_;
    Engine& engine_;
    const RandomWaypointModel& mobility_;
    Metrics& metrics_;
};

} // namespace manetsim

#endif
