// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#include "manetsim/radio.hpp"

#include <stdexcept>

namespace manetsim {

Radio::Radio(RadioParams params, Engine& engine, const RandomWaypointModel& mobility,
             Metrics& metrics)
    : params_(params), range_sq_(params.tx_range_m * params.tx_range_m), engine_(engine),
      mobility_(mobility), metrics_(metrics) {
    if (params_.tx_range_m <= 0.0 || params_.per_hop_latency_s <= 0.0) {
        throw std::invalid_argument("Radio: tx_range and per_hop_latency must be positive");
    }
}

bool Radio::in_range(NodeId a, NodeId b, SimTime t) const {
    // Squared compare keeps the boundary test exact (no sqrt rounding).
    return distance_sq(mobility_.position_at(a, t), mobility_.position_at(b, t)) <= range_sq_;
}

std::vector<NodeId> Radio::neighbors(NodeId node, SimTime t) const {
    std::vector<NodeId> out;
    const Position p = mobility_.position_at(node, t);
    const auto n = static_cast<NodeId>(mobility_.node_count());
    for (NodeId u = 0; u < n; ++u) {
        if (u == node) continue;
        if (distance_sq(p, mobility_.position_at(u, t)) <= range_sq_) {
            out.push_back(u);
        }
    }
    return out;
}

void Radio::broadcast(NodeId sender, const Packet& packet) {
    const SimTime now = engine_.now();
    metrics_.count_tx(packet);
    for (NodeId u : neighbors(sender, now)) {
        engine_.schedule(now + params_.per_hop_latency_s, u, PacketDelivery{packet, sender});
    }
}

bool Radio::unicast(NodeId sender, NodeId receiver, const Packet& packet) {
    const SimTime now = engine_.now();
    metrics_.count_tx(packet);
    if (!in_range(sender, receiver, now)) {
        return false;
    }
    engine_.schedule(now + params_.per_hop_latency_s, receiver, PacketDelivery{packet, sender});
    return true;
}

} // namespace manetsim
