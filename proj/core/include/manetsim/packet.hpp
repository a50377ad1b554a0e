// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_PACKET_HPP
#define MANETSIM_PACKET_HPP

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "manetsim/types.hpp"

namespace manetsim {

// The five wire-level message kinds exchanged between nodes. RREQ, RREP,
// RERR and ALARM are control traffic; DATA is payload traffic.

/// Route request, flooded network-wide. (origin, broadcast_id) is unique
/// per discovery attempt and is what receivers dedupe on.
struct RreqPacket {
    NodeId origin = 0;
    SeqNo origin_seq = 0;
    std::uint32_t broadcast_id = 0;
    NodeId destination = 0;
    SeqNo dest_seq_known = 0; // last sequence number the origin has for destination (0 = none)
    std::uint32_t hop_count = 0;
};

/// Route reply, unicast hop-by-hop along the reverse path toward the origin.
struct RrepPacket {
    NodeId destination = 0;
    SeqNo dest_seq = 0;
    NodeId origin = 0;
    std::uint32_t hop_count = 0; // hops from destination to the current holder
    double lifetime_s = 0.0;
    NodeId replier = 0;          // node that generated this RREP
};

/// Route error naming destinations that became unreachable via a broken link.
struct RerrPacket {
    std::vector<std::pair<NodeId, SeqNo>> unreachable; // never empty on the wire
};

/// Application payload packet for one CBR flow.
struct DataPacket {
    FlowId flow = 0;
    NodeId src = 0;
    NodeId dst = 0;
    std::uint32_t payload_bytes = 0;
    SimTime sent_at = 0.0;       // set exactly once at origination
    std::uint32_t hops_so_far = 0;
};

/// DPRAODV reaction packet: tells receivers to discard RREPs generated by
/// `suspect`. Flooded with (originator, alarm_id) dedupe.
struct AlarmPacket {
    NodeId suspect = 0;
    NodeId originator = 0;
    std::uint64_t alarm_id = 0;
};

using Packet = std::variant<RreqPacket, RrepPacket, RerrPacket, DataPacket, AlarmPacket>;

inline bool is_data(const Packet& p) { return std::holds_alternative<DataPacket>(p); }
inline bool is_control(const Packet& p) { return !is_data(p); }
inline bool is_alarm(const Packet& p) { return std::holds_alternative<AlarmPacket>(p); }

const char* packet_kind_name(const Packet& p);

} // namespace manetsim

#endif
