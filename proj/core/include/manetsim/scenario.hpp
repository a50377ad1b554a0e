// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_SCENARIO_HPP
#define MANETSIM_SCENARIO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "manetsim/aodv.hpp"
#include "manetsim/blackhole.hpp"
#include "manetsim/dpraodv.hpp"
#include "manetsim/mobility.hpp"
#include "manetsim/radio.hpp"
#include "manetsim/traffic.hpp"

namespace manetsim {

enum class ProtocolMode {
    Aodv,         // honest network, malicious list inert
    AodvAttacked, // blackhole agents active, no detection
    Dpraodv,      // blackhole agents active, detection on
};

const char* mode_name(ProtocolMode mode);
std::optional<ProtocolMode> parse_mode(std::string_view text);

/// One scripted straight-line movement, for hand-built test topologies.
struct ScriptedLeg {
    NodeId node = 0;
    Position to;
    double speed = 0.0;
    SimTime depart = 0.0;
};

struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Complete description of one run. Field defaults are the reference
// experiment setup: 70 nodes on 800x800 m for 1000 s, 250 m range, random
// waypoint with 2 s pause and 60 m/s cap, 5 CBR sources, node 0 malicious.
struct ScenarioConfig {
    std::uint32_t node_count = 70;
    double sim_time_s = 1000.0;
    std::uint64_t master_seed = 1;
    ProtocolMode mode = ProtocolMode::Aodv;

    MobilityParams mobility;
    RadioParams radio;
    AodvParams aodv;
    DpraodvParams dpraodv;
    BlackholeParams blackhole;
    std::vector<NodeId> malicious_nodes = {0};

    /// Explicit detection override; unset means "on exactly in dpraodv mode".
    std::optional<bool> dpraodv_enabled;

    std::vector<CbrFlow> explicit_flows;
    std::uint32_t n_sources = 5;
    double cbr_interval_s = 0.25;
    std::uint32_t cbr_packet_bytes = 512;

    // Programmatic-only knobs for hand-built topologies (not scenario file
    // keys): pinned start positions and scripted movements.
    std::optional<std::vector<Position>> pinned_positions;
    std::vector<ScriptedLeg> scripted_legs;

    bool detection_enabled() const {
        return dpraodv_enabled.value_or(mode == ProtocolMode::Dpraodv);
    }
    bool attack_enabled() const { return mode != ProtocolMode::Aodv; }
    bool is_malicious(NodeId n) const;
};

/// Parse a key = value scenario document ('#' starts a comment). Unspecified
/// keys keep their defaults; unknown or repeated scalar keys and invalid
/// values raise ScenarioError naming the key. The result is validated.
ScenarioConfig parse_scenario(std::string_view text);

/// Constraint checks shared by parsing and programmatic construction.
void validate_scenario(const ScenarioConfig& config);

/// Stable full rendering of the effective configuration; equal configs
/// render byte-identically on every platform.
std::string canonical_text(const ScenarioConfig& config);

std::uint64_t config_digest(const ScenarioConfig& config);

} // namespace manetsim

#endif
