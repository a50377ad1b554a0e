// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_ROUTING_TABLE_HPP
#define MANETSIM_ROUTING_TABLE_HPP

#include <map>
#include <set>
#include <vector>

#include "manetsim/types.hpp"

namespace manetsim {

struct RouteEntry {
    NodeId next_hop = 0;
    std::uint32_t hop_count = 0;
    SeqNo dest_seq = 0;
    bool valid = false;
    SimTime expires_at = 0.0;
    std::set<NodeId> precursors; // neighbors routing through us to this destination
};

// Per-node distance-vector table keyed by destination. Entries are replaced
// only by strictly fresher information: a higher destination sequence
// number, or the same sequence number with a smaller hop count. This holds
// for valid and invalidated entries alike, so (dest_seq, -hop_count) is
// lexicographically non-decreasing over a destination's updates.
class RoutingTable {
  public:
    bool is_fresher(NodeId dest, SeqNo seq, std::uint32_t hops) const {
        auto it = entries_.find(dest);
        if (it == entries_.end()) return true;
        const RouteEntry& e = it->second;
        return seq > e.dest_seq || (seq == e.dest_seq && hops < e.hop_count);
    }

    /// Install/overwrite an entry when the freshness predicate allows it.
    /// Precursors survive the overwrite. Returns true on update.
    bool update(NodeId dest, NodeId next_hop, std::uint32_t hops, SeqNo seq, SimTime expires_at);

    /// Entry usable for forwarding at `now` (valid and not yet expired).
    RouteEntry* find_valid(NodeId dest, SimTime now);

    RouteEntry* find(NodeId dest);
    const RouteEntry* find(NodeId dest) const;

    /// Last known sequence number for dest, usable even from invalid or
    /// expired entries; 0 when the destination was never heard of.
    SeqNo known_seq(NodeId dest) const {
        auto it = entries_.find(dest);
        return it == entries_.end() ? 0 : it->second.dest_seq;
    }

    void add_precursor(NodeId dest, NodeId node);

    /// Mark unusable; sequence number and precursors are retained.
    void invalidate(NodeId dest);

    /// Invalidate every valid route using `next_hop`; returns the affected
    /// destinations in ascending order (the link-break RERR payload).
    std::vector<NodeId> invalidate_via(NodeId next_hop);

    /// Refresh the expiry of an active route on use.
    void touch(NodeId dest, SimTime expires_at);

    const std::map<NodeId, RouteEntry>& entries() const { return entries_; }

  private:
    std::map<NodeId, RouteEntry> entries_;
};

} // namespace manetsim

#endif
