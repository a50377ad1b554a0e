// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#include "manetsim/traffic.hpp"

#include <set>

#include "manetsim/scenario.hpp"

namespace manetsim {

std::uint64_t cbr_packet_count(const CbrFlow& flow) {
    // Mirrors the tick loop (repeated addition), so the count matches what a
    // run actually originates even when interval sums drift in the last ulp.
    std::uint64_t count = 0;
    for (SimTime t = flow.start; t < flow.stop; t += flow.interval_s) {
        ++count;
    }
    return count;
}

std::vector<CbrFlow> resolve_flows(const ScenarioConfig& cfg, RandomStream& traffic,
                                   RandomStream& jitter) {
    std::vector<CbrFlow> flows;
    if (!cfg.explicit_flows.empty()) {
        flows = cfg.explicit_flows;
        for (std::size_t i = 0; i < flows.size(); ++i) {
            flows[i].id = static_cast<FlowId>(i);
        }
        return flows;
    }

    std::vector<NodeId> honest;
    for (NodeId n = 0; n < cfg.node_count; ++n) {
        if (!cfg.is_malicious(n)) honest.push_back(n);
    }

    std::set<NodeId> used;
    auto pick = [&](NodeId exclude, bool has_exclude) {
        std::vector<NodeId> pool;
        for (NodeId n : honest) {
            if (!used.count(n) && (!has_exclude || n != exclude)) pool.push_back(n);
        }
        if (pool.empty()) {
            // every honest node already carries a flow endpoint; reuse
            for (NodeId n : honest) {
                if (!has_exclude || n != exclude) pool.push_back(n);
            }
        }
        return pool[static_cast<std::size_t>(
            traffic.uniform_int(0, static_cast<std::int64_t>(pool.size()) - 1))];
    };

    for (FlowId i = 0; i < cfg.n_sources; ++i) {
        CbrFlow f;
        f.id = i;
        if (i == 0 && cfg.node_count > 7 && !cfg.is_malicious(2) && !cfg.is_malicious(7)) {
            f.src = 2; // the conventional source/destination pair
            f.dst = 7;
        } else {
            f.src = pick(0, false);
            used.insert(f.src);
            f.dst = pick(f.src, true);
        }
        used.insert(f.src);
        used.insert(f.dst);
        f.packet_bytes = cfg.cbr_packet_bytes;
        f.interval_s = cfg.cbr_interval_s;
        f.start = jitter.uniform_real(1.0, 5.0);
        f.stop = cfg.sim_time_s;
        flows.push_back(f);
    }
    return flows;
}

} // namespace manetsim
