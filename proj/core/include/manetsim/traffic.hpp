// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_TRAFFIC_HPP
#define MANETSIM_TRAFFIC_HPP

#include <cstdint>
#include <vector>

#include "manetsim/rng.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

struct ScenarioConfig;

/// One constant-rate flow: a `packet_bytes` packet every `interval_s`
/// seconds at times start, start+interval, ... strictly below stop.
struct CbrFlow {
    FlowId id = 0;
    NodeId src = 0;
    NodeId dst = 0;
    std::uint32_t packet_bytes = 512;
    double interval_s = 0.25;
    SimTime start = 0.0;
    SimTime stop = 0.0;
};

std::uint64_t cbr_packet_count(const CbrFlow& flow);

/// The run's flow list. Explicit flows are used verbatim. Otherwise
/// n_sources flows are assigned: the first is the conventional pair (2, 7)
/// when those ids exist and are honest, the rest draw random honest
/// endpoints from `traffic`, avoiding reuse of endpoints while any unused
/// honest node remains. Start times draw from `jitter` uniformly in [1, 5);
/// flows stop at the simulation horizon.
std::vector<CbrFlow> resolve_flows(const ScenarioConfig& config, RandomStream& traffic,
                                   RandomStream& jitter);

} // namespace manetsim

#endif
