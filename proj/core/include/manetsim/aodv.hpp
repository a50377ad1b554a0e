// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_AODV_HPP
#define MANETSIM_AODV_HPP

#include <deque>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "manetsim/agent.hpp"
#include "manetsim/dpraodv.hpp"
#include "manetsim/routing_table.hpp"

namespace manetsim {

struct AodvParams {
    double route_lifetime_s = 10.0;
    double discovery_timeout_s = 1.0;
    std::uint32_t discovery_retries = 2;
    std::size_t buffer_cap = 64;
    // When set, a destination answering a request advances its own sequence
    // number only if the requester had already caught up with it (requested
    // seq equals current own seq); otherwise every reply advances it past
    // the requested value unconditionally.
    bool conditional_seq_bump = true;
    // Data packets are discarded after node_count * hop_cap_factor hops;
    // bounds transient forwarding loops while routes reconverge.
    std::uint32_t hop_cap_factor = 2;
};

/// One flow this node sources, for re-initiating discovery after a route
/// loss while the flow is active.
struct FlowWindow {
    NodeId dst = 0;
    SimTime start = 0.0;
    SimTime stop = 0.0;
};

// Per-node on-demand distance-vector agent: discovery flooding, reply
// handling under the sequence-number freshness rule, data forwarding with
// failure-driven route errors, plus the optional reply-anomaly guard
// (threshold check, blacklist, alarms).
class AodvAgent : public Agent {
  public:
    AodvAgent(NodeId id, AodvParams params, DpraodvParams guard_params, NodeContext ctx,
              std::size_t node_count);

    void set_source_flows(std::vector<FlowWindow> flows) { source_flows_ = std::move(flows); }

    NodeId id() const override { return id_; }
    void handle_packet(const Packet& packet, NodeId from) override;
    void handle_timer(const TimerEvent& timer) override;
    void originate_data(const DataPacket& pkt) override;

    const RoutingTable& table() const { return table_; }
    const DpraodvGuard& guard() const { return guard_; }
    SeqNo own_seq() const { return own_seq_; }

  private:
    struct PendingDiscovery {
        std::deque<DataPacket> buffered;
        std::uint32_t retries_left = 0;
        std::uint64_t timer_tag = 0; // ignores timeout events from stale arms
    };

    void handle_rreq(const RreqPacket& rreq, NodeId from);
    void handle_rrep(const RrepPacket& rrep, NodeId from);
    void handle_rerr(const RerrPacket& rerr, NodeId from);
    void handle_alarm(const AlarmPacket& alarm, NodeId from);
    void handle_data(DataPacket pkt, NodeId from);

    void forward_data(DataPacket pkt, NodeId from, bool originated);
    void deliver(const DataPacket& pkt);
    void begin_discovery(NodeId dest);
    void send_rreq(NodeId dest);
    void arm_discovery_timer(NodeId dest);
    void flush_buffer(NodeId dest);
    /// Unicast toward `broken` failed: invalidate everything routed through
    /// it, tell the precursors, restart discovery for own active flows.
    void local_link_break(NodeId broken);
    void rediscover_if_sourcing(const std::vector<NodeId>& dests);
    void emit_alarm(NodeId suspect);
    bool install_route(NodeId dest, NodeId next_hop, std::uint32_t hops, SeqNo seq,
                       SimTime expires_at);
    bool has_active_flow_to(NodeId dest, SimTime now) const;
    SimTime route_expiry() const { return ctx_.engine.now() + params_.route_lifetime_s; }

    NodeId id_;
    AodvParams params_;
    NodeContext ctx_;
    std::size_t node_count_;
    RoutingTable table_;
    DpraodvGuard guard_;
    SeqNo own_seq_ = 0;
    std::uint32_t broadcast_id_ = 0;
    std::set<std::pair<NodeId, std::uint32_t>> rreq_seen_;
    std::map<NodeId, PendingDiscovery> pending_;
    std::uint64_t timer_tag_counter_ = 0;
    std::vector<FlowWindow> source_flows_;
};

} // namespace manetsim

#endif
