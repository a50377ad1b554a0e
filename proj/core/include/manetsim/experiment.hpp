// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_EXPERIMENT_HPP
#define MANETSIM_EXPERIMENT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "manetsim/scenario.hpp"
#include "manetsim/trace.hpp"

namespace manetsim {

struct MetricsReport {
    double pdr = 0.0;
    bool pdr_degenerate = false; // nothing was sent; pdr reported as 0
    std::optional<double> avg_delay_s;
    std::optional<double> nro;
    std::optional<double> nro_excluding_alarms;
    std::uint64_t sent = 0;
    std::uint64_t delivered = 0;
    std::uint64_t control_tx = 0;
    std::uint64_t data_tx = 0;
    std::uint64_t alarm_tx = 0;
};

struct RunRecord {
    std::string axis_value = "NA"; // sweep coordinate; NA for standalone runs
    std::uint64_t seed = 0;
    ProtocolMode mode = ProtocolMode::Aodv;
    MetricsReport report;
    std::uint64_t config_digest = 0;
    std::uint64_t trajectory_digest = 0;
    std::uint64_t dispatched_events = 0;
    double wall_seconds = 0.0;
};

/// One deterministic run of a validated config.
RunRecord run_experiment(const ScenarioConfig& config, TraceSink* trace = nullptr);

enum class SweepAxis {
    NetworkSize, // node_count
    TrafficLoad, // n_sources
    Mobility,    // max_speed_mps
};

const char* axis_name(SweepAxis axis);
std::optional<SweepAxis> parse_axis(std::string_view text);

/// Base config with the axis coordinate applied.
ScenarioConfig apply_axis(SweepAxis axis, double value, ScenarioConfig base);

struct SweepSpec {
    SweepAxis axis = SweepAxis::NetworkSize;
    std::vector<double> values;
    std::vector<std::uint64_t> seeds;
    std::vector<ProtocolMode> modes = {ProtocolMode::Aodv, ProtocolMode::AodvAttacked,
                                       ProtocolMode::Dpraodv};
};

/// Every (value, seed, mode) combination as independent runs, in that
/// nesting order. Runs execute on a small worker pool (MANETSIM_WORKERS
/// overrides the size); record order never depends on scheduling.
std::vector<RunRecord> run_sweep(const SweepSpec& spec, const ScenarioConfig& base);

/// Header plus one row per record:
/// axis_value,seed,mode,pdr,avg_delay_s,nro,sent,delivered,control_tx
/// Undefined metrics render as NA. Identical records yield identical bytes.
void emit_csv(const std::vector<RunRecord>& records, std::ostream& out);

/// False (with `error` set) when the target cannot be written.
bool emit_csv_file(const std::vector<RunRecord>& records, const std::string& path,
                   std::string& error);

std::string format_axis_value(double value);

} // namespace manetsim

#endif
