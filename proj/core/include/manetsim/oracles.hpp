// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_ORACLES_HPP
#define MANETSIM_ORACLES_HPP

#include <string>
#include <vector>

#include "manetsim/scenario.hpp"

namespace manetsim {

// Hand-built topologies small enough that the exact expected metrics can be
// worked out on paper. The per-hop latency in all of them is 2^-9 s so hop
// counts turn into exactly representable delays. Tests and the `oracle` CLI
// subcommand run these by name.
struct OracleScenario {
    std::string name;
    std::string summary;
    ScenarioConfig config;
};

const std::vector<OracleScenario>& oracle_scenarios();

/// nullptr when no oracle has that name.
const OracleScenario* find_oracle(std::string_view name);

} // namespace manetsim

#endif
