// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_SIMULATION_HPP
#define MANETSIM_SIMULATION_HPP

#include <memory>
#include <vector>

#include "manetsim/aodv.hpp"
#include "manetsim/blackhole.hpp"
#include "manetsim/engine.hpp"
#include "manetsim/metrics.hpp"
#include "manetsim/mobility.hpp"
#include "manetsim/radio.hpp"
#include "manetsim/scenario.hpp"
#include "manetsim/trace.hpp"

namespace manetsim {

// Wires one validated scenario into a runnable network: engine, mobility,
// radio, agents (honest or malicious per mode), flows and their tick chain.
// The four named random streams are drawn independently, so the same seed
// gives identical trajectories and traffic schedules under every protocol
// mode.
class Simulation {
  public:
    explicit Simulation(const ScenarioConfig& config, TraceSink* trace = nullptr);

    /// Drive the run to the configured horizon.
    void run() { engine_.run_until(config_.sim_time_s); }

    const ScenarioConfig& config() const { return config_; }
    const Metrics& metrics() const { return metrics_; }
    const RunLog& runlog() const { return runlog_; }
    const std::vector<CbrFlow>& flows() const { return flows_; }
    Engine& engine() { return engine_; }
    const Engine& engine() const { return engine_; }
    RandomWaypointModel& mobility() { return mobility_; }

    /// The routing agent at `node`, or nullptr when it runs the adversary.
    const AodvAgent* aodv_agent(NodeId node) const;

    /// Position fingerprint over the whole horizon at 1 s sampling.
    std::uint64_t trajectory_digest() const {
        return mobility_.trajectory_digest(config_.sim_time_s);
    }

  private:
    void dispatch(const Event& ev);

    ScenarioConfig config_;
    TraceSink* trace_;
    RandomStream mobility_stream_;
    RandomStream traffic_stream_;
    RandomStream attacker_stream_;
    RandomStream jitter_stream_;
    Engine engine_;
    Metrics metrics_;
    RunLog runlog_;
    RandomWaypointModel mobility_;
    Radio radio_;
    std::vector<CbrFlow> flows_;
    std::vector<std::unique_ptr<Agent>> agents_;
};

} // namespace manetsim

#endif
