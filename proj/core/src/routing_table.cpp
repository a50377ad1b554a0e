// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#include "manetsim/routing_table.hpp"

namespace manetsim {

bool RoutingTable::update(NodeId dest, NodeId next_hop, std::uint32_t hops, SeqNo seq,
                          SimTime expires_at) {
    if (!is_fresher(dest, seq, hops)) {
        return false;
    }
    RouteEntry& e = entries_[dest];
    e.next_hop = next_hop;
    e.hop_count = hops;
    e.dest_seq = seq;
    e.valid = true;
    e.expires_at = expires_at;
    return true;
}

RouteEntry* RoutingTable::find_valid(NodeId dest, SimTime now) {
    auto it = entries_.find(dest);
    if (it == entries_.end()) return nullptr;
    RouteEntry& e = it->second;
    if (!e.valid || now > e.expires_at) return nullptr;
    return &e;
}

RouteEntry* RoutingTable::find(NodeId dest) {
    auto it = entries_.find(dest);
    return it == entries_.end() ? nullptr : &it->second;
}

const RouteEntry* RoutingTable::find(NodeId dest) const {
    auto it = entries_.find(dest);
    return it == entries_.end() ? nullptr : &it->second;
}

void RoutingTable::add_precursor(NodeId dest, NodeId node) {
    auto it = entries_.find(dest);
    if (it != entries_.end()) {
        it->second.precursors.insert(node);
    }
}

void RoutingTable::invalidate(NodeId dest) {
    auto it = entries_.find(dest);
    if (it != entries_.end()) {
        it->second.valid = false;
    }
}

std::vector<NodeId> RoutingTable::invalidate_via(NodeId next_hop) {
    std::vector<NodeId> affected;
    for (auto& [dest, e] : entries_) {
        if (e.valid && e.next_hop == next_hop) {
            e.valid = false;
            affected.push_back(dest);
        }
    }
    return affected;
}

void RoutingTable::touch(NodeId dest, SimTime expires_at) {
    auto it = entries_.find(dest);
    if (it != entries_.end() && expires_at > it->second.expires_at) {
        it->second.expires_at = expires_at;
    }
}

} // namespace manetsim
