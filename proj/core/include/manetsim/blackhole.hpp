// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_BLACKHOLE_HPP
#define MANETSIM_BLACKHOLE_HPP

#include <set>
#include <utility>

#include "manetsim/agent.hpp"
#include "manetsim/rng.hpp"

namespace manetsim {

struct BlackholeParams {
    std::uint32_t seq_offset_lo = 15;
    std::uint32_t seq_offset_hi = 200;
    std::uint32_t reply_hop_count = 1; // advertise adjacency to the destination
    double reply_lifetime_s = 10.0;
};

// Malicious agent: answers every distinct route request with a forged reply
// whose destination sequence number is the requested one plus a random
// offset, claims to be next to the destination, and swallows every data
// packet. It relays nothing and emits no other packet kind.
class BlackholeAgent : public Agent {
  public:
    BlackholeAgent(NodeId id, BlackholeParams params, NodeContext ctx, RandomStream& stream);

    NodeId id() const override { return id_; }
    void handle_packet(const Packet& packet, NodeId from) override;
    void handle_timer(const TimerEvent&) override {}
    void originate_data(const DataPacket& pkt) override;

  private:
    void forge_reply(const RreqPacket& rreq, NodeId from);

    NodeId id_;
    BlackholeParams params_;
    NodeContext ctx_;
    RandomStream& stream_;
    std::set<std::pair<NodeId, std::uint32_t>> rreq_seen_;
};

} // namespace manetsim

#endif
